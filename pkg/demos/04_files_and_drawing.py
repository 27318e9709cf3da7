"""Instance files, solution files and SVG drawings.

The same steps are available from the shell:

    cpematch gen --na 10 --nb 10 --m 20 --k 8 --c 2 --seed 3 -o inst.cpem
    cpematch solve inst.cpem -o sol.txt --svg sol.svg
    cpematch check inst.cpem sol.txt
"""

import tempfile
from pathlib import Path

from cpematch.cli import main
from cpematch.formats import parse_instance, write_instance

out = Path(tempfile.mkdtemp())
inst_path, sol_path, svg_path = out / "inst.cpem", out / "sol.txt", out / "sol.svg"

main(["gen", "--na", "10", "--nb", "10", "--m", "20", "--k", "8", "--c", "2",
      "--seed", "3", "-o", str(inst_path)])
text = inst_path.read_text()
print(text)

# Writing a parsed file reproduces it byte for byte.
assert write_instance(parse_instance(text)) == text

main(["solve", str(inst_path), "-o", str(sol_path), "--svg", str(svg_path)])
print(sol_path.read_text())
status = main(["check", str(inst_path), str(sol_path)])
print("check exit status:", status)
print("drawing written to", svg_path)
