import bz2
from importlib import resources
from pathlib import Path

import pytest

from bgmorph import Dictionary, Lexeme, scan_bgoffice, scan_wiktionary
from bgmorph.paradigms import load_paradigms

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def paradigm_set():
    bundled = resources.files("bgmorph").joinpath("data/paradigms.bg")
    return load_paradigms(Path(str(bundled)))


@pytest.fixture(scope="session")
def bgoffice_dir():
    return DATA / "bgoffice" / "data"


@pytest.fixture(scope="session")
def wiktionary_xml():
    return DATA / "wiktionary" / "fixture_dump.xml"


@pytest.fixture(scope="session")
def wiktionary_bz2(tmp_path_factory, wiktionary_xml):
    out = tmp_path_factory.mktemp("dump") / "fixture_dump.xml.bz2"
    out.write_bytes(bz2.compress(wiktionary_xml.read_bytes()))
    return out


@pytest.fixture(scope="session")
def fixture_dict(paradigm_set, bgoffice_dir, wiktionary_bz2):
    """Frozen dictionary over both fixture resources; shared, do not mutate."""
    d = Dictionary()
    scan_bgoffice(bgoffice_dir, d, paradigm_set)
    scan_wiktionary(wiktionary_bz2, d, paradigm_set)
    return d.freeze()


@pytest.fixture(scope="session")
def fixture_dict_file(tmp_path_factory, fixture_dict):
    path = tmp_path_factory.mktemp("dict") / "fixture.dict"
    fixture_dict.save(path)
    return path


@pytest.fixture(scope="session")
def type83_dict(paradigm_set):
    """Dictionary holding only the canonical type-83 adjective."""
    d = Dictionary()
    d.add_lexeme(Lexeme("рядък", "83"), paradigm_set)
    return d.freeze()
