"""The on-disk machine format: one JSON document per machine.

    {"version": 1, "kind": "mealy" | "moore",
     "input": [...], "output": [...], "states": [...],
     "delta": {state: {letter: state}},
     "out":   {state: {letter: letter}}   (mealy)
            | {state: letter}             (moore)}

Unknown top-level fields are rejected.  Serialization renders composite
(tuple) states as "⟨f,e⟩", second-machine state first, so composed
machines stay auditable; parse(serialize(m)) == m for machines whose
states are plain names.
"""

from __future__ import annotations

import json
from typing import Union

from .core import (
    Machine,
    MachineError,
    MealyMachine,
    MooreMachine,
    validate_mealy,
    validate_moore,
)

FORMAT_VERSION = 1
_FIELDS = {"version", "kind", "input", "output", "states", "delta", "out"}


class MachineFileError(MachineError):
    """Base class for machine file problems."""


class MachineFileSyntaxError(MachineFileError):
    """The file is not a well-formed machine document."""


class VersionMismatch(MachineFileError):
    """The file declares an unsupported format version."""


def parse_machine_text(text: str) -> dict:
    """Parse a machine document into the raw description consumed by
    validate_mealy / validate_moore."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise MachineFileSyntaxError("line %d: %s" % (err.lineno, err.msg)) from err
    if not isinstance(doc, dict):
        raise MachineFileSyntaxError("a machine file holds a single JSON object")
    if doc.get("version") != FORMAT_VERSION:
        raise VersionMismatch("unsupported format version %r" % (doc.get("version"),))
    unknown = set(doc) - _FIELDS
    if unknown:
        raise MachineFileSyntaxError("unknown field %r" % (sorted(unknown)[0],))
    if doc.get("kind") not in ("mealy", "moore"):
        raise MachineFileSyntaxError("kind must be \"mealy\" or \"moore\"")
    return doc


def machine_from_raw(doc: dict) -> Machine:
    if doc["kind"] == "mealy":
        return validate_mealy(doc)
    return validate_moore(doc)


def load_machine(path) -> Machine:
    with open(path, encoding="utf-8") as handle:
        return machine_from_raw(parse_machine_text(handle.read()))


def render_state(s: Union[str, tuple]) -> str:
    """Composite states print as ⟨f,e⟩ with the second-machine state first."""
    if isinstance(s, tuple):
        return "⟨%s⟩" % ",".join(render_state(part) for part in s)
    return str(s)


def machine_to_raw(m: Machine) -> dict:
    states = [render_state(e) for e in m.states]
    name = {e: render_state(e) for e in m.states}
    delta = {name[e]: {} for e in m.states}
    for (e, a), target in m.delta.items():
        delta[name[e]][a] = name[target]
    if isinstance(m, MealyMachine):
        kind = "mealy"
        out = {name[e]: {} for e in m.states}
        for (e, a), letter in m.out.items():
            out[name[e]][a] = letter
    else:
        kind = "moore"
        out = {name[e]: letter for e, letter in m.out.items()}
    return {
        "version": FORMAT_VERSION,
        "kind": kind,
        "input": list(m.input.symbols),
        "output": list(m.output.symbols),
        "states": states,
        "delta": delta,
        "out": out,
    }


def serialize_machine(m: Machine) -> str:
    return json.dumps(machine_to_raw(m), ensure_ascii=False, indent=2) + "\n"


def save_machine(m: Machine, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(serialize_machine(m))
