import argparse
from collections import Counter
import difflib
from pathlib import Path
import sys
from typing import List, Sequence

from pysurgflow import __all__ as static_all


# Start of the template to be appended to
pyi_template = """## File generated from scripts/generate_init.py.
## DO NOT EDIT DIRECTLY

"""

# Template for __all__ export list
all_template = """__all__ = [
    {},
]"""

# Flags to denote the beginning/end of the __all__ exports in __init__.py
begin_flag = "# begin __all__"
end_flag = "# end __all__"

# Make it safe to run from anywhere
package_dir = Path(__file__).resolve().parent.parent / "pysurgflow"
init_file = package_dir / "__init__.py"
pyi_file = package_dir / "__init__.pyi"


def duplicate_exports(names: Sequence[str]) -> List[str]:
    return sorted(name for name, n in Counter(names).items() if n > 1)


def generate_init_pyi() -> str:
    init_contents = init_file.read_text()
    start_idx = init_contents.index(begin_flag)
    end_idx = init_contents.index(end_flag)

    dupes = duplicate_exports(static_all)
    BR = "\n"
    assert (
        not dupes
    ), f"Aborting pyi file generation. The following names are exported twice:{BR}{BR.join(dupes)}"

    all_imports = ",\n    ".join('"{}"'.format(s) for s in sorted(static_all))

    return (
        pyi_template
        + init_contents[:start_idx]
        + all_template.format(all_imports)
        + init_contents[end_idx + len(end_flag) :]
    )


def stub_diff(regen: str) -> List[str]:
    """Unified diff from the committed stub to the regenerated one."""
    current = pyi_file.read_text().splitlines(keepends=True) if pyi_file.exists() else []
    return list(
        difflib.unified_diff(
            current,
            regen.splitlines(keepends=True),
            fromfile="original",
            tofile="generated",
            n=3,
        )
    )


def main(argv: Sequence[str] = None) -> int:
    parser = argparse.ArgumentParser(
        description="Regenerate pysurgflow/__init__.pyi from the package exports"
    )
    parser.add_argument(
        "--check",
        action="store_true",
        help="Only check if the generated file would change",
    )
    args = parser.parse_args(argv)

    regen = generate_init_pyi()

    if args.check:
        diff = stub_diff(regen)
        if len(diff) != 0:
            print("".join(diff), end="")
            print(
                "The __init__.pyi needs to be regenerated. Please run scripts/generate_init.py"
            )
            return 1
        print("No changes in __init__.py")
        return 0

    pyi_file.write_text(regen)
    return 0


if __name__ == "__main__":
    sys.exit(main())
