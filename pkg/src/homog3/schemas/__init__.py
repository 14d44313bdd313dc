"""JSON Schemas for the CLI's ``--json`` reports and the NGraph file format."""

import json
from importlib import resources

NAMES = (
    "analyze",
    "check_amalgamation",
    "check_extension",
    "check_homogeneity",
    "classify",
    "find_clique",
    "find_halfgraph",
    "lines",
    "ngraph",
)

COMMANDS = {
    "analyze": "analyze",
    "check ap": "check_amalgamation",
    "check jep": "check_amalgamation",
    "check extension": "check_extension",
    "check homogeneity": "check_homogeneity",
    "classify": "classify",
    "find clique": "find_clique",
    "find halfgraph": "find_halfgraph",
    "lines": "lines",
}


def load(name):
    return json.loads(resources.files(__name__).joinpath(name + ".json").read_text(encoding="utf-8"))


def for_report(report):
    """Schema matching a report's ``command`` field."""
    return load(COMMANDS[report["command"]])
