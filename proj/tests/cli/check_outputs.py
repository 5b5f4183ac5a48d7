"""Validates CLI output against the published schemas and checks SVG output.

usage: check_outputs.py <pwcycles binary> <repo root> <scratch dir>
"""
import json
import pathlib
import subprocess
import sys
import xml.etree.ElementTree as ET

import jsonschema
from referencing import Registry, Resource

SVG_NS = "{http://www.w3.org/2000/svg}"


def load(path):
    return json.loads(pathlib.Path(path).read_text(encoding="utf-8"))


def run(binary, *args):
    proc = subprocess.run([binary, *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def main():
    binary, root, scratch = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    scratch.mkdir(parents=True, exist_ok=True)
    scenario_schema = load(root / "schema" / "scenario.schema.json")
    report_schema = load(root / "schema" / "report.schema.json")
    registry = Registry().with_resources(
        [(s["$id"], Resource.from_contents(s)) for s in (scenario_schema, report_schema)]
    )
    scenario_validator = jsonschema.Draft7Validator(scenario_schema, registry=registry)
    report_validator = jsonschema.Draft7Validator(report_schema, registry=registry)
    failures = []

    for path in sorted((root / "scenarios").glob("*.json")):
        errors = list(scenario_validator.iter_errors(load(path)))
        if errors:
            failures.append(f"{path.name}: {errors[0].message}")

    for case in ["prop1", "prop2", "prop3", "prop4", "prop5"]:
        report_path = scratch / f"{case}.json"
        code, _, err = run(binary, "builtin", case, "--out", str(report_path))
        if code != 0:
            failures.append(f"builtin {case}: exit {code}: {err}")
            continue
        report = load(report_path)
        errors = list(report_validator.iter_errors(report))
        if errors:
            failures.append(f"report {case}: {errors[0].message} at {list(errors[0].path)}")

        svg_a, svg_b = scratch / f"{case}_a.svg", scratch / f"{case}_b.svg"
        for out in (svg_a, svg_b):
            code, _, err = run(binary, "plot", str(report_path), "-o", str(out))
            if code != 0:
                failures.append(f"plot {case}: exit {code}: {err}")
        if not svg_a.exists():
            continue
        tree = ET.parse(svg_a)
        if tree.getroot().tag != SVG_NS + "svg":
            failures.append(f"plot {case}: root element is {tree.getroot().tag}")
        cycles = [g for g in tree.getroot().iter(SVG_NS + "g") if g.get("id", "").startswith("cycle-")]
        if len(cycles) != report["verified_count"]:
            failures.append(f"plot {case}: {len(cycles)} cycles drawn, report has {report['verified_count']}")
        if svg_a.read_bytes() != svg_b.read_bytes():
            failures.append(f"plot {case}: output differs between runs")

    for message in failures:
        print("FAIL:", message)
    print(f"{len(failures)} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
