"""Regenerate the shipped fixture documents and DOT golden files."""

import sys
from pathlib import Path

sys.path.insert(0, "src")

from ceaf import dot, fixtures, io_doc

ROOT = Path(__file__).resolve().parent.parent
FIXDIR = ROOT / "fixtures"
GOLDDIR = FIXDIR / "goldens"


def main():
    GOLDDIR.mkdir(parents=True, exist_ok=True)
    for name, maker in fixtures.ALL.items():
        fw = maker()
        io_doc.save(fw, FIXDIR / f"{name}.json")
        print("wrote", FIXDIR / f"{name}.json")

    ldp = fixtures.ldp()
    a1 = ldp.by_id("a1")
    a2 = ldp.by_id("a2")
    a3 = ldp.by_id("a3")
    goldens = {
        "ldp-whole.dot": dot.export_dot(ldp),
        "ldp-view-a1-a3.dot": dot.export_dot(ldp, {a1, a3}),
        "ldp-view-a1-a2-a3.dot": dot.export_dot(ldp, {a1, a2, a3}),
    }
    for name, text in goldens.items():
        (GOLDDIR / name).write_text(text)
        print("wrote", GOLDDIR / name)


if __name__ == "__main__":
    main()
