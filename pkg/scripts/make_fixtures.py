"""Regenerate tests/fixtures from the built-in corpus."""
from __future__ import annotations

import pathlib

from hypermatroid import formats as fmt
from hypermatroid.constructions import relabel
from hypermatroid.corpus import graphic_k4, phase_u24, standard_corpus, uniform, valuated_u23
from hypermatroid.hopf import ClassRegistry, MinorHopfAlgebra
from hypermatroid.hyperfield import KRASNER, SIGNS, table_of
from hypermatroid.matroid import GPFunction, circuits_from_gpf

OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def write(name: str, text: str) -> None:
    (OUT / name).write_text(text, encoding="utf-8")


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    write("krasner_table.json", fmt.serialize_hyperfield(table_of(KRASNER)))
    write("signs_table.json", fmt.serialize_hyperfield(table_of(SIGNS)))
    doc = fmt.hyperfield_to_doc(table_of(SIGNS))
    doc["add"]["-1,1"] = ["0"]
    doc["schema"] = fmt.HYPERFIELD_SCHEMA
    write("signs_table_broken.json", fmt.dumps(doc))

    u24 = uniform(SIGNS, 2, 4)
    write("u11.json", fmt.serialize_matroid(uniform(SIGNS, 1, 1)))
    write("u24_signs.json", fmt.serialize_matroid(u24))
    write("u24_signs_circuits.json", fmt.serialize_matroid(circuits_from_gpf(u24)))
    cycle = {"1": "2", "2": "3", "3": "4", "4": "1"}
    write("u24_signs_cycled.json", fmt.serialize_matroid(relabel(u24, cycle)))
    flipped = GPFunction.from_subsets(SIGNS, u24.ground, 2, {
        b: (-1 if b == ("1", "3") else 1) for b in [u24.labels(m) for m in u24.values]})
    write("u24_signs_bad.json", fmt.serialize_matroid(flipped))
    write("u24_krasner.json", fmt.serialize_matroid(uniform(KRASNER, 2, 4)))
    write("u35_krasner.json", fmt.serialize_matroid(uniform(KRASNER, 3, 5)))
    write("k4_krasner.json", fmt.serialize_matroid(graphic_k4(KRASNER)))
    write("k4_signs.json", fmt.serialize_matroid(graphic_k4(SIGNS)))
    write("u23_tropical.json", fmt.serialize_matroid(valuated_u23()))
    write("u24_phase.json", fmt.serialize_matroid(phase_u24()))
    entries = {e.name: e.phi for e in standard_corpus()}
    write("loop_coloop_signs.json", fmt.serialize_matroid(entries["loop-coloop-signs"]))
    write("u24_tropical.json", fmt.serialize_matroid(entries["U24-tropical"]))

    alg = MinorHopfAlgebra(ClassRegistry(SIGNS))
    x = alg.registry.element(uniform(SIGNS, 2, 3)) * alg.registry.element(uniform(SIGNS, 1, 1))
    write("algebra_u23_u11.json", fmt.serialize_algebra(x, SIGNS))


if __name__ == "__main__":
    main()
