#!/usr/bin/env python3
"""Run the CLI on a few inputs and validate every JSON output against schemas/."""
import json
import subprocess
import sys
from pathlib import Path

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

root = Path(__file__).resolve().parent.parent
cli = sys.argv[1] if len(sys.argv) > 1 else str(root / "build" / "intreg_cli")

schemas = {p.name: json.loads(p.read_text()) for p in (root / "schemas").glob("*.json")}
registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())


def check(schema, args, stdin=""):
    run = subprocess.run([cli, *args], input=stdin, capture_output=True, text=True)
    if run.returncode not in (0, 1):
        sys.exit(f"{args}: exit {run.returncode}: {run.stderr}")
    doc = json.loads(run.stdout)
    Draft202012Validator(schemas[schema], registry=registry).validate(doc)
    return doc


tri = ">a#>aa$>a#>aaa$>aa#>aaa$"
check("decision.json", ["decide", "--regex", ">1$>a#>aa$", "--problem", "vertex-cover", "--emit-reps"])
check("decision.json", ["decide", "--regex", ">$(>a#>aa$)+", "--problem", "vertex-cover"])
check("decision.json", ["decide", "--regex", ">1*$(>a*#>a*$)*" + tri, "--problem", "3-coloring"])
check("decision.json", ["decide", "--regex", ">1$>a#>a$", "--problem", "rbds"])
check("decision.json", ["decide", "--regex", ">11*$(>a#>aa$)*", "--problem", "maxcut"])
check("core.json", ["core", "--regex", ">1?$(>a#>aa$)*", "--emit-reps"])
check("graph.json", ["decode"], ">1^{99999999999999999999}$>a#>aa$")
check("graph.json", ["decode", "--problem", "rbds"], ">1$>a#>aa$")
check("verdict.json", ["solve", "--problem", "vertex-cover"], '{"vertices":[1,2],"edges":[[1,2]],"k":1}')
check("registry.json", ["list-problems"])
# the automaton format the CLI reads with --automaton
Draft202012Validator(schemas["nfa.json"], registry=registry).validate(
    {"states": 2, "initial": 0, "finals": [1], "transitions": [[0, ">", 1]]})
print("schemas ok")
