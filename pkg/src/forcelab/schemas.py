"""JSON Schemas for every JSON document the CLI emits."""

_ids = {"type": "array", "items": {"type": "integer", "minimum": 0}}
_id_lists = {"type": "array", "items": _ids}

GRAPH = {
    "type": "object",
    "required": ["name", "n", "edges", "labels"],
    "properties": {
        "name": {"type": "string"},
        "n": {"type": "integer", "minimum": 0},
        "edges": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}},
        "labels": {"oneOf": [{"type": "null"}, {"type": "array", "items": {"type": "string"}}]},
    },
    "additionalProperties": False,
}

CHRONOLOGY = {
    "type": "object",
    "required": ["initial", "steps"],
    "properties": {
        "initial": _ids,
        "steps": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["from", "to"],
                    "properties": {"from": {"type": "integer"}, "to": {"type": "integer"}},
                    "additionalProperties": False,
                },
            },
        },
    },
    "additionalProperties": False,
}

CLOSURE = {
    "type": "object",
    "required": ["graph", "initial", "final", "complete", "steps", "policy"],
    "properties": {
        "graph": {"type": "string"},
        "initial": _ids,
        "final": _ids,
        "complete": {"type": "boolean"},
        "steps": {"type": "integer", "minimum": 0},
        "policy": {"enum": ["all-eager", "max-concurrent", "random"]},
        "trace": CHRONOLOGY,
        "fort": _ids,
    },
    "additionalProperties": False,
}

SOLVE = {
    "type": "object",
    "required": ["graph", "z", "witness", "algorithm", "lower_bound_forts", "stats"],
    "properties": {
        "graph": {"type": "string"},
        "z": {"type": "integer", "minimum": 0},
        "witness": _ids,
        "algorithm": {"enum": ["fortbb", "exhaustive"]},
        "lower_bound_forts": _id_lists,
        "complete": {"type": "boolean"},
        "lower_bound": {"type": "integer", "minimum": 0},
        "stats": {
            "type": "object",
            "required": ["nodes", "closures", "wall_time", "iterations"],
            "properties": {
                "nodes": {"type": "integer"},
                "closures": {"type": "integer"},
                "wall_time": {"type": "number"},
                "iterations": {"type": "integer"},
            },
        },
    },
    "additionalProperties": False,
}

FORTS = {
    "type": "object",
    "required": ["graph", "minimal_forts", "count"],
    "properties": {
        "graph": {"type": "string"},
        "minimal_forts": _id_lists,
        "count": {"type": "integer", "minimum": 0},
        "forts": _id_lists,
        "forts_count": {"type": "integer", "minimum": 0},
    },
    "additionalProperties": False,
}

VERIFY = {
    "type": "object",
    "required": ["suite", "seed", "rows", "passed", "total", "all_passed"],
    "properties": {
        "suite": {"type": "string"},
        "seed": {"type": "integer"},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["suite", "case", "expected", "actual", "passed", "detail", "seconds"],
                "properties": {
                    "suite": {"type": "string"},
                    "case": {"type": "string"},
                    "passed": {"type": "boolean"},
                    "detail": {"type": "string"},
                    "seconds": {"type": "number"},
                },
            },
        },
        "passed": {"type": "integer"},
        "total": {"type": "integer"},
        "all_passed": {"type": "boolean"},
    },
    "additionalProperties": False,
}
