# Copyright 2026 idemproblem Contributors. All rights reserved.
#
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

import typing


class SemigroupError(Exception):
    "Base class for all errors"


class ParameterError(SemigroupError):
    "Something's wrong with user supplied parameters"


class InputParseError(ParameterError):
    "An input document could not be parsed"

    def __init__(self, message: str, position: typing.Optional[str] = None) -> None:
        self.position = position
        if position:
            message = f"{position}: {message}"
        super().__init__(message)


class InvariantViolation(SemigroupError):
    "A mathematical invariant failed to hold; this indicates a bug"


class ResourceLimitError(SemigroupError):
    "A configured size cap was exceeded"
