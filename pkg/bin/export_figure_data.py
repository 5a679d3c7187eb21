from contextlib import redirect_stdout
from pathlib import Path

import sys

SOURCE_DIRECTORY = Path(__file__).resolve().parent.parent / "src"
OUTPUT_DIRECTORY = Path("./figures/")

TARGETS = ("fig3", "fig4", "fig5", "fig6")

sys.path.insert(0, str(SOURCE_DIRECTORY))

from heatengine.__main__ import main as heatengineMain

def exportTarget(target: str) -> int:
    outputPath = OUTPUT_DIRECTORY / f"{target}.csv"

    with open(outputPath, "w", encoding="utf-8", newline="") as file:
        with redirect_stdout(file):
            code = heatengineMain(["sweep", "--target", target])

    if code != 0:
        outputPath.unlink(missing_ok=True)

    return code

def main():
    OUTPUT_DIRECTORY.mkdir(parents=True, exist_ok=True)

    for target in TARGETS:
        print(f"exporting {target}")

        if exportTarget(target) != 0:
            print(f"{target} failed")
            return 1

    print(f"wrote {len(TARGETS)} sweeps to {OUTPUT_DIRECTORY}")
    return 0

if __name__ == "__main__":
    raise SystemExit(main())
