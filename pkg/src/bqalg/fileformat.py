"""Reading and writing ``.bqa`` presentation files.

The format is a list of ``key = value`` statements separated by newlines
or ``;``, with ``#`` comments::

    n = 3; field = "fp:7"
    q = [2, 1/2, 2]            # q21, q31, q32
    A = [[0,0,1],[0,1,0],[1,0,0]]
    B = [0, 0, 0]

For n = 3 the entries may also be set one at a time with ``q1 q2 q3``,
``a b c``, ``alpha beta gamma``, ``lambda mu nu`` and ``b1 b2 b3``.
"""

from __future__ import annotations

import re

from .field import Field, field_from_spec
from .rewrite import BqPresentation, pairs


class FileFormatError(ValueError):
    def __init__(self, msg: str, line: int, col: int, source: str = "<input>"):
        super().__init__(f"{source}:{line}:{col}: {msg}")
        self.msg = msg
        self.line = line
        self.col = col
        self.source = source


# alias -> (row index into pairs(3), column) with column None meaning q, "b" meaning B
ALIASES = {
    "q1": (0, None), "q2": (1, None), "q3": (2, None),
    "a": (0, 0), "b": (0, 1), "c": (0, 2),
    "alpha": (1, 0), "beta": (1, 1), "gamma": (1, 2),
    "lambda": (2, 0), "mu": (2, 1), "nu": (2, 2),
    "b1": (0, "b"), "b2": (1, "b"), "b3": (2, "b"),
}
KEYS = {"n", "field", "q", "A", "B"} | set(ALIASES)

_TOKEN = re.compile(r"""
    (?P<space>[ \t\r]+)
  | (?P<comment>\#[^\n]*)
  | (?P<newline>\n)
  | (?P<string>"[^"\n]*"|'[^'\n]*')
  | (?P<number>[+-]?\d+(?:\s*/\s*[+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<punct>[\[\],;=])
""", re.VERBOSE)


def _tokens(text: str, source: str):
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise FileFormatError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1, source)
        kind = m.lastgroup
        col = pos - line_start + 1
        if kind == "newline":
            yield ("sep", "\n", line, col)
            line += 1
            line_start = m.end()
        elif kind == "punct" and m.group() == ";":
            yield ("sep", ";", line, col)
        elif kind not in ("space", "comment"):
            yield (kind, m.group(), line, col)
        pos = m.end()
    yield ("end", "", line, pos - line_start + 1)


class _Reader:
    def __init__(self, text, source):
        self.toks = list(_tokens(text, source))
        self.i = 0
        self.source = source

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise FileFormatError(msg, tok[2], tok[3], self.source)

    def expect(self, value):
        tok = self.take()
        if tok[1] != value:
            self.fail(f"expected {value!r}, got {tok[1]!r}", tok)
        return tok

    def value(self):
        tok = self.peek()
        if tok[1] == "[":
            self.take()
            items = []
            while self.peek()[1] != "]":
                items.append(self.value())
                if self.peek()[1] == ",":
                    self.take()
                elif self.peek()[1] != "]":
                    self.fail("expected ',' or ']'")
            self.take()
            return ("list", items, tok)
        if tok[0] in ("number", "string", "name"):
            self.take()
            text = tok[1]
            if tok[0] == "string":
                text = text[1:-1]
            return (tok[0], text.replace(" ", "") if tok[0] == "number" else text, tok)
        self.fail(f"expected a value, got {tok[1] or 'end of input'!r}")

    def statements(self):
        while True:
            while self.peek()[0] == "sep":
                self.take()
            if self.peek()[0] == "end":
                return
            key = self.take()
            if key[0] != "name":
                self.fail(f"expected a key, got {key[1]!r}", key)
            self.expect("=")
            val = self.value()
            if self.peek()[0] not in ("sep", "end"):
                self.fail("expected ';' or a newline after the value")
            yield key, val


def parse_presentation(text: str, field: Field | None = None, source: str = "<input>") -> BqPresentation:
    """Parse the file text; ``field`` overrides a ``field =`` line if given."""
    reader = _Reader(text, source)
    seen = {}
    for key, val in reader.statements():
        name = key[1]
        if name not in KEYS:
            raise FileFormatError(f"unknown key {name!r}", key[2], key[3], source)
        if name in seen:
            raise FileFormatError(f"key {name!r} given twice", key[2], key[3], source)
        seen[name] = (key, val)

    def fail(msg, tok):
        raise FileFormatError(msg, tok[2], tok[3], source)

    if field is None:
        if "field" in seen:
            _, val = seen["field"]
            try:
                field = field_from_spec(val[1])
            except ValueError as e:
                fail(str(e), val[2])
        else:
            field = field_from_spec("Q")
    K = field

    def scalar(val):
        if val[0] != "number":
            fail(f"expected an exact number, got {val[1]!r}", val[2])
        try:
            return K.parse(val[1])
        except (ValueError, ZeroDivisionError) as e:
            fail(str(e), val[2])

    def vector(val, length, what):
        if val[0] != "list" or len(val[1]) != length:
            fail(f"{what} needs a list of {length} entries", val[2])
        return [scalar(v) for v in val[1]]

    if "n" in seen:
        _, val = seen["n"]
        if val[0] != "number" or "/" in val[1] or int(val[1]) < 2:
            fail("n must be an integer >= 2", val[2])
        n = int(val[1])
    else:
        n = 3
    m = len(pairs(n))
    q = [K.one] * m
    a = [[K.zero] * n for _ in range(m)]
    b = [K.zero] * m
    if "q" in seen:
        q = vector(seen["q"][1], m, "q")
    if "A" in seen:
        val = seen["A"][1]
        if val[0] != "list" or len(val[1]) != m:
            fail(f"A needs {m} rows", val[2])
        a = [vector(row, n, "each row of A") for row in val[1]]
    if "B" in seen:
        b = vector(seen["B"][1], m, "B")
    for name, (row, col) in ALIASES.items():
        if name not in seen:
            continue
        key, val = seen[name]
        if n != 3:
            fail(f"{name!r} is only meaningful for n = 3", key)
        whole = "q" if col is None else ("B" if col == "b" else "A")
        if whole in seen:
            fail(f"{name!r} conflicts with {whole!r}", key)
        x = scalar(val)
        if col is None:
            q[row] = x
        elif col == "b":
            b[row] = x
        else:
            a[row][col] = x
    for t, x in enumerate(q):
        if x == 0:
            tok = seen["q"][1][2] if "q" in seen else seen[f"q{t + 1}"][1][2]
            fail("every q entry must be nonzero", tok)
    return BqPresentation.build(n, K, q, a, b)


def read_presentation(path, field: Field | None = None) -> BqPresentation:
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read(), field, source=str(path))


def format_presentation(P: BqPresentation) -> str:
    fmt = lambda xs: "[" + ", ".join(str(x) for x in xs) + "]"  # noqa: E731
    return "\n".join([
        f"n = {P.n}",
        f'field = "{P.K.spec}"',
        f"q = {fmt(P.q)}",
        "A = [" + ", ".join(fmt(row) for row in P.a) + "]",
        f"B = {fmt(P.b)}",
        "",
    ])
