"""Build the extension with cargo and place it next to this script as nsring.so."""

import pathlib
import shutil
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent


def main():
    subprocess.run(
        ["cargo", "build", "--release", "-p", "nsring-py", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    suffix = {"darwin": "dylib", "win32": "dll"}.get(sys.platform, "so")
    prefix = "" if sys.platform == "win32" else "lib"
    built = ROOT / "target" / "release" / f"{prefix}nsring.{suffix}"
    target = ROOT / "python" / ("nsring.pyd" if sys.platform == "win32" else "nsring.so")
    shutil.copyfile(built, target)
    print(f"wrote {target}")


if __name__ == "__main__":
    main()
