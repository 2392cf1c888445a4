"""Build the dictionary asset bundled with the package.

Scans the repository's fixture resources (the BG-Office-style directory
and the uncompressed wiktionary export) with the bundled paradigms and
writes src/bgmorph/data/builtin.dict plus a manifest recording the
expected census.  Rerun after changing fixtures or paradigms.
"""

import json
from pathlib import Path

from bgmorph import Dictionary, scan_bgoffice, scan_wiktionary
from bgmorph.paradigms import load_paradigms

REPO = Path(__file__).resolve().parent.parent
BGOFFICE = REPO / "tests" / "data" / "bgoffice" / "data"
WIKTIONARY = REPO / "tests" / "data" / "wiktionary" / "fixture_dump.xml"
DATA_DIR = REPO / "src" / "bgmorph" / "data"


def main() -> int:
    paradigms = load_paradigms(DATA_DIR / "paradigms.bg")
    dictionary = Dictionary()
    scan_bgoffice(BGOFFICE, dictionary, paradigms)
    scan_wiktionary(WIKTIONARY, dictionary, paradigms)
    dictionary.freeze()
    dictionary.save(DATA_DIR / "builtin.dict")
    stats = dictionary.stats()
    manifest = {
        "lemma_count": stats.lemma_count,
        "form_count": stats.form_count,
        "ambiguous_surface_count": stats.ambiguous_surface_count,
        "sources": ["bgoffice fixture directory", "wiktionary fixture export"],
    }
    (DATA_DIR / "builtin_manifest.json").write_text(
        json.dumps(manifest, indent=2) + "\n", encoding="utf-8"
    )
    print(f"builtin.dict: {manifest}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
