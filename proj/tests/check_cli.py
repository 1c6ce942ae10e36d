"""Exit codes, batch streaming and survey goldens of the command-line tool."""

import json
import os
import subprocess
import sys
import tempfile


def run(cli, *args):
    return subprocess.run([cli, *args], capture_output=True, text=True)


def main() -> int:
    cli = sys.argv[1]
    failures = []

    def expect(cond, what):
        if not cond:
            failures.append(what)

    r = run(cli, "analyze", "C12", "--json")
    doc = json.loads(r.stdout)
    expect(r.returncode == 0 and doc["flags"]["cut"] is False and doc["rho"] == 1, "analyze C12")
    expect(run(cli, "analyze", "metacyclic(5,2").returncode == 2, "parse error exit code")
    expect(run(cli, "analyze", "metacyclic(8,2,2,3)").returncode == 2, "invalid spec exit code")
    expect(run(cli, "--cap", "100", "analyze", "D400").returncode == 3, "cap exit code")
    expect(run(cli, "survey", "alternating", "--max", "23").returncode == 2, "alternating bound")
    expect(run(cli, "survey", "alternating", "--max", "22", "--expect", "paper").returncode == 0, "alternating golden")
    expect(run(cli, "survey", "gk-catalog", "--expect", "paper").returncode == 0, "gk catalog golden")
    expect(run(cli, "batch", "/nonexistent/specs.txt").returncode == 5, "batch i/o exit code")

    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "specs.txt")
        with open(path, "w", encoding="utf-8") as f:
            f.write("# corpus sample\nmetacyclic(4,2,2,3)\n\nproduct(C3, C4\nalt(13)\nD10\n")
        outs = []
        for jobs in ("1", "3"):
            r = run(cli, "batch", path, "--jobs", jobs)
            expect(r.returncode == 0, "batch exit code")
            outs.append(r.stdout)
        lines = outs[0].splitlines()
        expect(len(lines) == 4, "batch line count")
        objs = [json.loads(line) for line in lines]
        expect(objs[0]["flags"]["cut"] is True, "batch Q8 cut")
        expect("error" in objs[1] and objs[1]["error"]["kind"] == "ParseError", "batch error object")
        expect(objs[2]["spec"] == "alt(13)" and objs[3]["spec"] == "D10", "batch order")
        expect(outs[0] == outs[1], "batch output independent of concurrency")

    for f in failures:
        print("FAILED:", f)
    print(f"{len(failures)} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
