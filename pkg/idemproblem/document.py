"""JSON input documents and the JSON shapes of constructed objects and reports.

Three input kinds are understood:

    {"kind": "partial-bijection-generators", "degree": 2, "generators": [[1, null]]}
    {"kind": "multiplication-table", "size": 1, "table": [[0]]}
    {"kind": "action", "actor": {...}, "target": {...}, "act": [[0, 1, 2]]}

Optional flags on the first two kinds: "monoid", "max_closure" and "seed"; a table document
may also carry "names" and "generators" (element indices).
"""
# Copyright 2026 idemproblem Contributors. All rights reserved.
#
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

import dataclasses
import json
import typing

from idemproblem import limits
from idemproblem.action import EndomorphismAction
from idemproblem.dfa import Dfa
from idemproblem.exceptions import InputParseError, ParameterError
from idemproblem.isomorphism import generating_set
from idemproblem.partial_bijection import PartialBijection
from idemproblem.semigroup import FiniteInverseSemigroup, FiniteSemigroup, from_table, generate_closure
from idemproblem.syntactic import SyntacticAlgebra
from idemproblem.utils import format_word

PARTIAL_BIJECTION_GENERATORS = "partial-bijection-generators"
MULTIPLICATION_TABLE = "multiplication-table"
ACTION = "action"
KINDS = (PARTIAL_BIJECTION_GENERATORS, MULTIPLICATION_TABLE, ACTION)

IntTable = typing.Tuple[typing.Tuple[int, ...], ...]


@dataclasses.dataclass(frozen=True)
class InputDocument:
    """A validated input document.

    maps holds the partial bijections of a generator document; generators holds element
    indices of a table document. Both travel under the wire key "generators".
    """

    kind: str
    degree: typing.Optional[int] = None
    size: typing.Optional[int] = None
    maps: typing.Tuple[PartialBijection, ...] = ()
    table: typing.Optional[IntTable] = None
    names: typing.Optional[typing.Tuple[str, ...]] = None
    generators: typing.Tuple[int, ...] = ()
    actor: typing.Optional["InputDocument"] = None
    target: typing.Optional["InputDocument"] = None
    act: typing.Optional[IntTable] = None
    monoid: bool = False
    max_closure: typing.Optional[int] = None
    seed: typing.Optional[int] = None


def _path(prefix: str, key: typing.Union[str, int]) -> str:
    if isinstance(key, int):
        return f"{prefix}[{key}]"
    return f"{prefix}.{key}" if prefix else key


def _require(data: typing.Dict[str, typing.Any], key: str, prefix: str) -> typing.Any:
    if key not in data:
        raise InputParseError(f'missing field "{key}"', prefix or None)
    return data[key]


def _int(value: typing.Any, path: str, low: int = 0, high: typing.Optional[int] = None) -> int:
    # bool is an int subclass
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputParseError(f"expected an integer, got {json.dumps(value)}", path)
    if value < low or (high is not None and value >= high):
        upper = "" if high is None else f"..{high - 1}"
        raise InputParseError(f"index {value} out of range {low}{upper}", path)
    return value


def _list(value: typing.Any, path: str, length: typing.Optional[int] = None) -> typing.List[typing.Any]:
    if not isinstance(value, list):
        raise InputParseError(f"expected a list, got {json.dumps(value)}", path)
    if length is not None and len(value) != length:
        raise InputParseError(f"expected {length} entries, got {len(value)}", path)
    return value


def _int_table(value: typing.Any, path: str, rows: int, columns: int, high: int) -> IntTable:
    return tuple(
        tuple(
            _int(entry, _path(_path(path, r), c), 0, high)
            for c, entry in enumerate(_list(row, _path(path, r), columns))
        )
        for r, row in enumerate(_list(value, path, rows))
    )


def _flags(data: typing.Dict[str, typing.Any], prefix: str) -> typing.Dict[str, typing.Any]:
    flags: typing.Dict[str, typing.Any] = {}
    if "monoid" in data:
        if not isinstance(data["monoid"], bool):
            raise InputParseError("expected true or false", _path(prefix, "monoid"))
        flags["monoid"] = data["monoid"]
    if "max_closure" in data:
        flags["max_closure"] = _int(data["max_closure"], _path(prefix, "max_closure"), 1)
    if "seed" in data:
        flags["seed"] = _int(data["seed"], _path(prefix, "seed"), 0, limits.SEED_LIMIT)
    return flags


def _parse_generators_document(data: typing.Dict[str, typing.Any], prefix: str) -> InputDocument:
    degree = _int(_require(data, "degree", prefix), _path(prefix, "degree"), 1)
    path = _path(prefix, "generators")
    rows = _list(_require(data, "generators", prefix), path)
    if not rows:
        raise InputParseError("at least one generator is required", path)
    maps = []
    for r, row in enumerate(rows):
        row_path = _path(path, r)
        images = [
            None if image is None else _int(image, _path(row_path, c), 0, degree)
            for c, image in enumerate(_list(row, row_path, degree))
        ]
        defined = [image for image in images if image is not None]
        if len(set(defined)) != len(defined):
            raise InputParseError("partial bijection is not injective", row_path)
        maps.append(PartialBijection(images))
    return InputDocument(PARTIAL_BIJECTION_GENERATORS, degree=degree, maps=tuple(maps), **_flags(data, prefix))


def _parse_table_document(data: typing.Dict[str, typing.Any], prefix: str) -> InputDocument:
    size = _int(_require(data, "size", prefix), _path(prefix, "size"), 1)
    table = _int_table(_require(data, "table", prefix), _path(prefix, "table"), size, size, size)
    names = None
    if "names" in data:
        names_path = _path(prefix, "names")
        names = tuple(_list(data["names"], names_path, size))
        for i, name in enumerate(names):
            if not isinstance(name, str):
                raise InputParseError("expected a string", _path(names_path, i))
    generators: typing.Tuple[int, ...] = ()
    if "generators" in data:
        path = _path(prefix, "generators")
        generators = tuple(_int(g, _path(path, i), 0, size) for i, g in enumerate(_list(data["generators"], path)))
    return InputDocument(
        MULTIPLICATION_TABLE, size=size, table=table, names=names, generators=generators, **_flags(data, prefix)
    )


def _document_size(document: InputDocument) -> typing.Optional[int]:
    """Element count known without running a closure, or None."""
    return document.size if document.kind == MULTIPLICATION_TABLE else None


def _parse_action_document(data: typing.Dict[str, typing.Any], prefix: str) -> InputDocument:
    actor = _parse_document(_require(data, "actor", prefix), _path(prefix, "actor"))
    target = _parse_document(_require(data, "target", prefix), _path(prefix, "target"))
    if ACTION in (actor.kind, target.kind):
        raise InputParseError("actions cannot be nested", prefix or None)
    path = _path(prefix, "act")
    rows = _list(_require(data, "act", prefix), path, _document_size(actor))
    columns = _document_size(target)
    if columns is None:
        columns = len(rows[0]) if rows and isinstance(rows[0], list) else None
    act = tuple(
        tuple(
            _int(entry, _path(_path(path, r), c), 0, columns)
            for c, entry in enumerate(_list(row, _path(path, r), columns))
        )
        for r, row in enumerate(rows)
    )
    return InputDocument(ACTION, actor=actor, target=target, act=act)


def _parse_document(data: typing.Any, prefix: str) -> InputDocument:
    if not isinstance(data, dict):
        raise InputParseError("expected an object", prefix or None)
    kind = _require(data, "kind", prefix)
    if kind == PARTIAL_BIJECTION_GENERATORS:
        return _parse_generators_document(data, prefix)
    if kind == MULTIPLICATION_TABLE:
        return _parse_table_document(data, prefix)
    if kind == ACTION:
        return _parse_action_document(data, prefix)
    raise InputParseError(f'unknown kind {json.dumps(kind)}, expected one of {", ".join(KINDS)}', _path(prefix, "kind"))


def parse_input(text: typing.Union[str, bytes]) -> InputDocument:
    """Parse and validate a JSON input document; bytes must be UTF-8.

    Raises:
        InputParseError: Undecodable bytes, malformed JSON, wrong shape, out-of-range index or a
            non-injective map.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise InputParseError(f"invalid UTF-8 ({e.reason})", f"byte {e.start}") from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputParseError(e.msg, f"line {e.lineno}, column {e.colno}") from e
    return _parse_document(data, "")


def input_to_json(document: InputDocument) -> typing.Dict[str, typing.Any]:
    data: typing.Dict[str, typing.Any] = {"kind": document.kind}
    if document.kind == PARTIAL_BIJECTION_GENERATORS:
        data["degree"] = document.degree
        data["generators"] = [list(p.images) for p in document.maps]
    elif document.kind == MULTIPLICATION_TABLE:
        data["size"] = document.size
        data["table"] = [list(row) for row in document.table or ()]
        if document.names is not None:
            data["names"] = list(document.names)
        if document.generators:
            data["generators"] = list(document.generators)
    else:
        assert document.actor is not None and document.target is not None
        data["actor"] = input_to_json(document.actor)
        data["target"] = input_to_json(document.target)
        data["act"] = [list(row) for row in document.act or ()]
    if document.monoid:
        data["monoid"] = True
    if document.max_closure is not None:
        data["max_closure"] = document.max_closure
    if document.seed is not None:
        data["seed"] = document.seed
    return data


def dumps(data: typing.Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def dump_input(document: InputDocument) -> str:
    return dumps(input_to_json(document))


def build_semigroup(document: InputDocument, max_size: int = limits.MAX_CLOSURE) -> FiniteInverseSemigroup:
    """Construct the semigroup a generator or table document describes.

    A max_closure flag in the document overrides max_size. A table document without generators
    gets a greedy generating set, so the language commands have an alphabet.
    """
    if document.max_closure is not None:
        max_size = document.max_closure
    if document.kind == PARTIAL_BIJECTION_GENERATORS:
        return generate_closure(document.maps, monoid=document.monoid, max_size=max_size)
    if document.kind == MULTIPLICATION_TABLE:
        semigroup = from_table(document.table, document.names, document.generators, monoid_generated=document.monoid)
        if not semigroup.generators:
            semigroup = semigroup.with_generators(generating_set(semigroup), monoid_generated=document.monoid)
        return semigroup
    raise ParameterError(f"A {document.kind} document does not describe a single semigroup")


def build_action(document: InputDocument, max_size: int = limits.MAX_CLOSURE) -> EndomorphismAction:
    if document.kind != ACTION:
        raise ParameterError(f"Expected an action document, got {document.kind}")
    assert document.actor is not None and document.target is not None
    return EndomorphismAction(
        build_semigroup(document.actor, max_size), build_semigroup(document.target, max_size), document.act
    )


def semigroup_to_json(semigroup: FiniteSemigroup) -> typing.Dict[str, typing.Any]:
    data: typing.Dict[str, typing.Any] = {
        "size": semigroup.size,
        "names": list(semigroup.names),
        "table": semigroup.table.tolist(),
        "identity": semigroup.identity,
        "idempotents": sorted(semigroup.idempotents()),
        "generators": list(semigroup.generators),
        "monoid_generated": semigroup.monoid_generated,
    }
    if semigroup.witness_words is not None:
        data["witness_words"] = [list(w) for w in semigroup.witness_words]
    if isinstance(semigroup, FiniteInverseSemigroup):
        data["inverse_of"] = list(semigroup.inverse_of)
        if semigroup.elements is not None:
            data["elements"] = [list(p.images) for p in semigroup.elements]
    return data


def semigroup_from_json(data: typing.Dict[str, typing.Any]) -> FiniteInverseSemigroup:
    """Rebuild an inverse semigroup written by semigroup_to_json."""
    elements = data.get("elements")
    return FiniteInverseSemigroup(
        data["table"],
        data["names"],
        data["generators"],
        witness_words=data.get("witness_words"),
        monoid_generated=data["monoid_generated"],
        inverse_of=data["inverse_of"],
        elements=None if elements is None else [PartialBijection(images) for images in elements],
    )


def closure_summary(semigroup: FiniteInverseSemigroup) -> typing.Dict[str, typing.Any]:
    data = semigroup_to_json(semigroup)
    data["stats"] = {
        "size": semigroup.size,
        "idempotents": len(semigroup.idempotents()),
        "generators": len(semigroup.generators),
        "has_identity": semigroup.identity is not None,
        "max_witness_length": max((len(w) for w in semigroup.witness_words or ()), default=0),
    }
    return data


def dfa_to_json(dfa: Dfa) -> typing.Dict[str, typing.Any]:
    return {
        "states": dfa.states,
        "alphabet_size": dfa.alphabet_size,
        "start": dfa.start,
        "transition": dfa.transition.tolist(),
        "accepting": [bool(a) for a in dfa.accepting],
        "state_names": list(dfa.state_names),
    }


def syntactic_to_json(algebra: SyntacticAlgebra) -> typing.Dict[str, typing.Any]:
    monoid = algebra.monoid
    return {
        "monoid": {
            "size": monoid.size,
            "names": list(monoid.names),
            "table": monoid.table.tolist(),
            "idempotents": sorted(monoid.idempotents()),
        },
        "letter_image": list(algebra.letter_image),
        "letters": [format_word((a,)) for a in range(len(algebra.letter_image))],
        "semigroup_part": list(algebra.semigroup_part),
        "empty_word_merged": algebra.empty_word_merged,
        "dichotomy": "M+ = M" if algebra.empty_word_merged else "M+ = M minus identity",
    }
