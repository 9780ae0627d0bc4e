"""Tour of the `mofs` command-line interface.

Every library capability is reachable from the CLI: construct a set,
write it in the plain-text exchange format, verify it, analyze its
completeness and maximality, and try to extend it.
"""

import subprocess
import sys
import tempfile
from pathlib import Path


def run(*args):
    cmd = [sys.executable, "-m", "mofs.cli", *args]
    print(f"$ mofs {' '.join(args)}")
    proc = subprocess.run(cmd, capture_output=True, text=True)
    out = proc.stdout.strip()
    if out:
        print("\n".join("  " + line for line in out.splitlines()[:6]))
        if len(out.splitlines()) > 6:
            print("  ...")
    print(f"  (exit {proc.returncode})\n")
    return proc


run("bound", "2", "3")
run("count", "3", "1")

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "federer4.mofs"
    run("construct", "--hadamard", "4", "-o", str(path))
    run("verify", str(path))
    run("analyze", str(path))
    run("extend", str(path), "--exhaustive")

    # A corrupt file exits 1 with a diagnostic on stderr.
    bad = Path(tmp) / "bad.mofs"
    bad.write_text("MOFS m=2 lambda=1 count=1\n1 1\n2 2\n")
    proc = run("verify", str(bad))
    print(f"stderr: {proc.stderr.strip()}")
