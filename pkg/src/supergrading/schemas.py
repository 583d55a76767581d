"""JSON Schemas for everything the library and CLI emit."""

PYRAMID = {
    "type": "object",
    "required": ["p", "q", "rows"],
    "properties": {
        "p": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "q": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "rows": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["len", "parity", "f"],
                "properties": {
                    "len": {"type": "integer", "minimum": 1},
                    "parity": {"enum": ["even", "odd"]},
                    "f": {"type": "integer"},
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}

# h is any representative; Grading.to_dict emits the centred one (max + min in {0, 1})
GRADING = {
    "type": "object",
    "required": ["m", "n", "h"],
    "properties": {
        "m": {"type": "integer", "minimum": 0},
        "n": {"type": "integer", "minimum": 0},
        "h": {"type": "array", "items": {"type": "integer"}},
    },
}

CENTRALIZER = {
    "type": "object",
    "required": ["p", "q", "algebra", "dimEven", "dimOdd", "factors"],
    "properties": {
        "p": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "q": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "algebra": {"enum": ["gl", "osp"]},
        "dimEven": {"type": "integer", "minimum": 0},
        "dimOdd": {"type": "integer", "minimum": 0},
        # gl: factor gl(a|b); osp: factor osp(a|b) with b the (even) odd dimension
        "factors": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["a", "b"],
                "properties": {"a": {"type": "integer", "minimum": 0},
                               "b": {"type": "integer", "minimum": 0}},
            },
        },
        "direct": {
            "type": "object",
            "required": ["dimEven", "dimOdd"],
        },
        "agree": {"type": "boolean"},
    },
}

DIAGRAM = {
    "type": "object",
    "required": ["word", "degrees"],
    "properties": {
        "word": {"type": "string", "pattern": "^[ed]+$"},
        "degrees": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    },
    "additionalProperties": False,
}

_INTS = {"type": "array", "items": {"type": "integer"}}
_MATRIX = {"type": "array", "items": _INTS}

GOOD_GRADINGS = {
    "type": "object",
    "required": ["p", "q", "m", "n", "count", "gradings"],
    "properties": {
        "p": PYRAMID["properties"]["p"],
        "q": PYRAMID["properties"]["q"],
        "m": {"type": "integer", "minimum": 0},
        "n": {"type": "integer", "minimum": 0},
        "count": {"type": "integer", "minimum": 1},
        "gradings": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["f", "h", "good"],
                "properties": {"f": _INTS, "h": _INTS, "good": {"type": "boolean"}},
                "additionalProperties": False,
            },
        },
        "oracle": {
            "type": "object",
            "required": ["margin", "count", "equal"],
            "properties": {"margin": {"type": "integer"}, "count": {"type": "integer"},
                           "equal": {"type": "boolean"}},
        },
    },
    "additionalProperties": False,
}

DYNKIN = {
    "type": "object",
    "required": ["pyramid", "h", "e", "f", "sl2", "good", "goodViaCentralizer"],
    "properties": {
        "pyramid": PYRAMID,
        "h": _INTS,
        "e": _MATRIX,
        "f": _MATRIX,
        "sl2": {"type": "boolean"},
        "good": {"type": "boolean"},
        "goodViaCentralizer": {"type": "boolean"},
    },
    "additionalProperties": False,
}

DIAGRAM_EQ = {
    "type": "object",
    "required": ["d1", "d2", "sameGrading", "equivalent", "witness"],
    "properties": {
        "d1": DIAGRAM,
        "d2": DIAGRAM,
        "sameGrading": {"type": "boolean"},
        "equivalent": {"type": "boolean"},
        "witness": {
            "oneOf": [
                {"type": "null"},
                {"type": "array", "items": {
                    "type": "object", "required": ["kind", "k"],
                    "properties": {"kind": {"enum": ["odd", "even"]},
                                   "k": {"type": "integer", "minimum": 0}}}},
            ],
        },
    },
    "additionalProperties": False,
}
