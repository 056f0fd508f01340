"""JSON Schemas for ``--json`` output, one per subcommand."""

_EVEN = {"type": "integer", "multipleOf": 2}

REPORT = {
    "type": "object",
    "required": ["d", "lower", "upper", "exact", "method"],
    "additionalProperties": False,
    "properties": {
        "d": {"oneOf": [_EVEN, {"type": "null"}]},
        "lower": _EVEN,
        "upper": _EVEN,
        "exact": {"type": "boolean"},
        "method": {"enum": ["stabilized-additivity", "theorem-1.1", "prop-1.2"]},
    },
}

ERROR = {
    "type": "object",
    "required": ["error", "message"],
    "properties": {
        "error": {"type": "string"},
        "message": {"type": "string"},
        "reason": {"type": "string"},
        "offset": {"type": "integer", "minimum": 0},
        "expected": {"type": "array", "items": {"type": "string"}},
        "side": {"type": "integer"},
    },
}

_INT_LIST = {"type": "array", "items": {"type": "integer"}}

SCHEMAS = {
    "normalize": {
        "type": "object",
        "required": ["e", "b"],
        "additionalProperties": False,
        "properties": {"e": {"type": "integer"}, "b": _INT_LIST},
    },
    "plumbing": {
        "type": "object",
        "required": ["vertices", "edges", "center"],
        "additionalProperties": False,
        "properties": {
            "vertices": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["id", "framing"],
                    "additionalProperties": False,
                    "properties": {"id": {"type": "integer"}, "framing": {"type": "integer"}},
                },
            },
            "edges": {"type": "array", "items": {**_INT_LIST, "minItems": 2, "maxItems": 2}},
            "center": {"type": "integer"},
        },
    },
    "d": {
        "type": "object",
        "required": ["d"],
        "properties": {
            "d": _EVEN,
            "rank": {"type": "integer"},
            "chi": _INT_LIST,
            "norm": {"type": "integer"},
            "nodes": {"type": "integer"},
        },
    },
    "mu-bar": {
        "type": "object",
        "required": ["mu_bar", "wu", "d", "bound", "equality"],
        "additionalProperties": False,
        "properties": {
            "mu_bar": {"type": "integer"},
            "wu": {"type": "array", "items": {"enum": [0, 1]}},
            "d": _EVEN,
            "bound": _EVEN,
            "equality": {"type": "boolean"},
        },
    },
    "splice-d": REPORT,
    "bounds": REPORT,
    "v0-torus": {
        "type": "object",
        "required": ["v0"],
        "additionalProperties": False,
        "properties": {"v0": {"type": "integer", "minimum": 0}},
    },
    "check": {
        "type": "object",
        "required": ["ok", "checks"],
        "additionalProperties": False,
        "properties": {
            "ok": {"type": "boolean"},
            "checks": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["name", "ok", "detail"],
                    "additionalProperties": False,
                    "properties": {
                        "name": {"type": "string"},
                        "ok": {"type": "boolean"},
                        "detail": {"type": "string"},
                    },
                },
            },
        },
    },
}
SCHEMAS["d-lattice"] = SCHEMAS["d"]
