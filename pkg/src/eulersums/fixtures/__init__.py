"""Golden reduction tables shipped as data files, with a checksum manifest."""

import hashlib
import json
from importlib import resources


def _read(name: str) -> bytes:
    return resources.files(__package__).joinpath(name).read_bytes()


def load(name: str) -> dict:
    return json.loads(_read(name).decode("utf-8"))


def table_fixture(weight: int, basis: str = "paper") -> dict:
    if weight == 5 and basis == "zlobin":
        return load("weight5_zlobin.json")
    names = {2: "weight2.json", 3: "weight3.json", 4: "weight4.json", 5: "weight5_integral.json"}
    if weight not in names:
        raise KeyError(f"no fixture for weight {weight}")
    return load(names[weight])


def verify_checksums() -> list[str]:
    """Names of fixture files whose sha256 disagrees with the manifest."""
    manifest = load("manifest.json")
    bad = []
    for name, digest in manifest["files"].items():
        if hashlib.sha256(_read(name)).hexdigest() != digest:
            bad.append(name)
    return bad
