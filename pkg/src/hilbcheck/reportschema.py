"""Minimal schema validation for the machine-readable reports.

Supports exactly the subset of constructs the report formats need: typed
objects with required keys, arrays with a fixed item schema, enums, and the
scalar types.  validate raises SchemaError with the offending path.
"""


class SchemaError(ValueError):
    pass


_TYPES = {
    "object": dict,
    "array": list,
    "string": str,
    "integer": int,
    "number": (int, float),
    "boolean": bool,
}


def validate(obj, schema, path="$"):
    kind = schema.get("type")
    if kind is not None:
        pytype = _TYPES[kind]
        if kind == "boolean" and not isinstance(obj, bool):
            raise SchemaError(f"{path}: expected boolean, got {type(obj).__name__}")
        if kind == "integer" and isinstance(obj, bool):
            raise SchemaError(f"{path}: expected integer, got boolean")
        if not isinstance(obj, pytype):
            raise SchemaError(f"{path}: expected {kind}, got {type(obj).__name__}")
    if "enum" in schema and obj not in schema["enum"]:
        raise SchemaError(f"{path}: {obj!r} not in {schema['enum']}")
    if kind == "object":
        for key in schema.get("required", ()):
            if key not in obj:
                raise SchemaError(f"{path}: missing required key {key!r}")
        props = schema.get("properties", {})
        for key, val in obj.items():
            if key in props:
                validate(val, props[key], f"{path}.{key}")
            elif not schema.get("additional", True):
                raise SchemaError(f"{path}: unexpected key {key!r}")
    if kind == "array" and "items" in schema:
        for i, item in enumerate(obj):
            validate(item, schema["items"], f"{path}[{i}]")


VERIFY_REPORT_SCHEMA = {
    "type": "object",
    "required": ["seed", "backend", "all_pass", "cases"],
    "additional": False,
    "properties": {
        "seed": {"type": "integer"},
        "backend": {"type": "string"},
        "all_pass": {"type": "boolean"},
        "cases": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "status", "value"],
                "properties": {
                    "name": {"type": "string"},
                    "status": {"type": "string",
                               "enum": ["PASS", "FAIL", "INDETERMINATE"]},
                    "value": {"type": "string"},
                    "note": {"type": "string"},
                    "seconds": {"type": "number"},
                },
            },
        },
    },
}

ANALYZE_REPORT_SCHEMA = {
    "type": "object",
    "required": ["command", "result"],
    "properties": {
        "command": {"type": "string"},
        "file": {"type": "string"},
        "result": {},
    },
}
