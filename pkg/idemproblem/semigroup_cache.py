"""On-disk cache of semigroups generated from partial bijection documents"""
# Copyright 2026 idemproblem Contributors. All rights reserved.
#
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

import hashlib
import json
import logging
import os
import shutil
import typing

from idemproblem import limits
from idemproblem.document import (
    PARTIAL_BIJECTION_GENERATORS,
    InputDocument,
    build_semigroup,
    dump_input,
    semigroup_from_json,
    semigroup_to_json,
)
from idemproblem.exceptions import ResourceLimitError
from idemproblem.semigroup import FiniteInverseSemigroup

log = logging.getLogger(__name__)


class SemigroupCache:
    """Store generated closures as JSON files keyed by the checksum of their input document

    Attributes:
        cache_dir: Directory used to store cached semigroups, or None to disable caching.

    Methods:
        clear: Remove cache directory
        load: Return the semigroup of a document, from cache if possible
    """

    def __init__(self, cache_dir: typing.Optional[str] = None) -> None:
        self.cache_dir = cache_dir

    def clear(self) -> None:
        """Remove cache directory, if it exists"""
        if self.cache_dir is not None and os.path.isdir(self.cache_dir):
            log.info("Removing cache dir: %s", self.cache_dir)
            try:
                shutil.rmtree(self.cache_dir)
            except OSError as e:
                log.error("Failed: %s", str(e))

    def cache_file_name(self, document: InputDocument) -> str:
        assert self.cache_dir
        checksum = hashlib.sha256(dump_input(document).encode("utf-8")).hexdigest()
        return os.path.join(self.cache_dir, f"{checksum}.json")

    def load(self, document: InputDocument, max_size: int = limits.MAX_CLOSURE) -> FiniteInverseSemigroup:
        """Build the semigroup of a document; closures are looked up in and written to the cache.

        Table documents are cheap to build and bypass the cache.

        Raises:
            ResourceLimitError: The closure, built or cached, has more than max_size elements.
        """
        if not self.cache_dir or document.kind != PARTIAL_BIJECTION_GENERATORS:
            return build_semigroup(document, max_size)
        if document.max_closure is not None:
            max_size = document.max_closure
        cache_file_name = self.cache_file_name(document)
        semigroup: typing.Optional[FiniteInverseSemigroup] = None
        if os.path.isfile(cache_file_name):
            try:
                with open(cache_file_name) as data_file:
                    semigroup = semigroup_from_json(json.load(data_file))
                log.info("Loaded semigroup from cache file %s", cache_file_name)
            except Exception as e:
                log.error("Ignoring unreadable cache file %s: %s", cache_file_name, str(e))
        if semigroup is not None:
            # the cache key does not cover the caller's cap
            if semigroup.size > max_size:
                raise ResourceLimitError(f"Closure exceeds {max_size} elements")
            return semigroup
        semigroup = build_semigroup(document, max_size)
        self._store(cache_file_name, semigroup)
        return semigroup

    @staticmethod
    def _store(cache_file_name: str, semigroup: FiniteInverseSemigroup) -> None:
        try:
            dir_name = os.path.dirname(cache_file_name)
            if not os.path.isdir(dir_name):
                os.makedirs(dir_name)
            with open(cache_file_name, "w") as json_file:
                json.dump(semigroup_to_json(semigroup), json_file)
        except Exception as e:
            log.error("Failed to store semigroup to cache: %s", str(e))
        else:
            log.info("Stored semigroup to cache file %s", cache_file_name)
