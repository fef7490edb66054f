"""Driving the command-line interface: build, verify, reproduce.

The CLI reads and writes the JSON formats documented in docs/formats.md.
Reports are byte-identical across runs for identical inputs and seed.
"""

import json
import pathlib
import subprocess
import sys
import tempfile

from braidalg import RATIONALS
from braidalg.gallery import corrupted_flip, flip_braiding
from braidalg.serialize import braiding_to_json


def cli(*args):
    return subprocess.run([sys.executable, "-m", "braidalg.cli", *args],
                          capture_output=True, text=True)


with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)
    flip_path = tmp / "flip.json"
    flip_path.write_text(json.dumps(braiding_to_json(flip_braiding(RATIONALS, 2))))

    out = cli("verify", "--input", str(flip_path))
    report = json.loads(out.stdout)
    print("verify flip: exit", out.returncode,
          " qybe:", report["qybe"], " invertible:", report["invertible"])

    bad_path = tmp / "bad.json"
    bad_path.write_text(json.dumps(braiding_to_json(corrupted_flip(RATIONALS))))
    out = cli("verify", "--input", str(bad_path))
    print("verify corrupted flip: exit", out.returncode)

    built = tmp / "built.json"
    cli("build", "--input", str(flip_path), "--degree", "3", "--out", str(built))
    print("build dump has", len(json.loads(built.read_text())["blocks"]), "blocks")

    out = cli("verify", "--input", str(built))
    print("re-verify build dump: exit", out.returncode)

    a = cli("primitives", "--input", str(flip_path), "--degree", "4").stdout
    b = cli("primitives", "--input", str(flip_path), "--degree", "4").stdout
    print("primitive dims:", json.loads(a)["dims"], " byte-identical reruns:", a == b)
