import json
from pathlib import Path

from ceaf.io_doc import SCHEMA

ROOT = Path(__file__).resolve().parent.parent


def test_shipped_schema_matches_loader():
    shipped = json.loads((ROOT / "schema" / "framework-document.schema.json").read_text())
    assert shipped == SCHEMA
