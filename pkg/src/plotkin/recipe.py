"""Parser and evaluator for the code-construction recipe DSL.

Grammar (one statement per line, ';' also accepted as a separator)::

    recipe  := stmt+
    stmt    := IDENT "=" call
    call    := "bch" "(" INT "," INT "," INT ["," INT] ")"
             | "cyclic" "(" INT "," INT "," POLY ")"
             | "extend" "(" IDENT ")"
             | "shorten" "(" IDENT "," posset ")"
             | "puncture" "(" IDENT "," posset ")"
             | "plotkin" "(" IDENT "," IDENT ")"
             | "dual" "(" IDENT ")"
             | "load" "(" PATH ")"
    posset  := "{" range ("," range)* "}"
    range   := INT [".." INT]

POLY and PATH are double-quoted strings; position sets are 1-based
inclusive; '#' starts a comment.  The last statement is the recipe's
result.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from . import codes
from .codes import LinearCode
from .galois import field_for_order, poly_from_string


class RecipeError(ValueError):
    """Syntax or evaluation error, carrying line/column when known."""

    def __init__(self, message: str, line: Optional[int] = None, col: Optional[int] = None):
        self.line = line
        self.col = col
        if line is not None:
            message = f"line {line}, col {col}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Call:
    op: str
    args: tuple
    line: int = 0
    col: int = 0


@dataclass(frozen=True)
class Stmt:
    name: str
    call: Call
    line: int = 0


@dataclass(frozen=True)
class RecipeAST:
    statements: Tuple[Stmt, ...]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RecipeAST):
            return NotImplemented
        mine = [(s.name, s.call.op, s.call.args) for s in self.statements]
        theirs = [(s.name, s.call.op, s.call.args) for s in other.statements]
        return mine == theirs


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<string>"[^"]*")
  | (?P<dots>\.\.)
  | (?P<int>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[=(){},;])
    """,
    re.VERBOSE,
)

_CONSTRUCTORS = {"bch", "cyclic", "extend", "shorten", "puncture", "plotkin", "dual", "load"}


def _tokenize(text: str):
    tokens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        pos = 0
        while pos < len(line):
            m = _TOKEN_RE.match(line, pos)
            if m is None:
                raise RecipeError(f"unexpected character {line[pos]!r}", lineno, pos + 1)
            pos = m.end()
            kind = m.lastgroup
            if kind == "ws":
                continue
            tokens.append((kind, m.group(), lineno, m.start() + 1))
        tokens.append(("newline", "\n", lineno, len(line) + 1))
    tokens.append(("eof", "", len(text.splitlines()) + 1, 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, value: Optional[str] = None):
        tok = self.next()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            raise RecipeError(f"expected {want!r}, got {tok[1]!r}", tok[2], tok[3])
        return tok

    def skip_separators(self):
        while self.peek()[0] == "newline" or self.peek()[1] == ";":
            self.next()

    def parse(self) -> RecipeAST:
        stmts: List[Stmt] = []
        names = set()
        self.skip_separators()
        while self.peek()[0] != "eof":
            tok = self.expect("ident")
            name = tok[1]
            if name in names:
                raise RecipeError(f"duplicate name {name!r}", tok[2], tok[3])
            self.expect("punct", "=")
            call = self.parse_call(names)
            names.add(name)
            stmts.append(Stmt(name, call, tok[2]))
            nxt = self.peek()
            if nxt[0] == "eof":
                break
            if nxt[0] == "newline" or nxt[1] == ";":
                self.skip_separators()
            else:
                raise RecipeError(f"expected end of statement, got {nxt[1]!r}", nxt[2], nxt[3])
        if not stmts:
            raise RecipeError("empty recipe", 1, 1)
        return RecipeAST(tuple(stmts))

    def parse_call(self, names) -> Call:
        tok = self.expect("ident")
        op = tok[1]
        if op not in _CONSTRUCTORS:
            raise RecipeError(f"unknown constructor {op!r}", tok[2], tok[3])
        self.expect("punct", "(")
        args: list = []
        if op == "bch":
            args.append(self.parse_int())
            self.expect("punct", ",")
            args.append(self.parse_int())
            self.expect("punct", ",")
            args.append(self.parse_int())
            if self.peek()[1] == ",":
                self.next()
                args.append(self.parse_int())
        elif op == "cyclic":
            args.append(self.parse_int())
            self.expect("punct", ",")
            args.append(self.parse_int())
            self.expect("punct", ",")
            args.append(self.parse_string())
        elif op in ("extend", "dual"):
            args.append(self.parse_ref(names))
        elif op in ("shorten", "puncture"):
            args.append(self.parse_ref(names))
            self.expect("punct", ",")
            args.append(self.parse_posset())
        elif op == "plotkin":
            args.append(self.parse_ref(names))
            self.expect("punct", ",")
            args.append(self.parse_ref(names))
        elif op == "load":
            args.append(self.parse_string())
        self.expect("punct", ")")
        return Call(op, tuple(args), tok[2], tok[3])

    def parse_int(self) -> int:
        tok = self.expect("int")
        return int(tok[1])

    def parse_string(self) -> str:
        tok = self.expect("string")
        return tok[1][1:-1]

    def parse_ref(self, names) -> str:
        tok = self.expect("ident")
        if tok[1] not in names:
            raise RecipeError(f"undefined name {tok[1]!r}", tok[2], tok[3])
        return tok[1]

    def parse_posset(self) -> tuple:
        self.expect("punct", "{")
        positions = set()
        while True:
            a = self.parse_int()
            if self.peek()[0] == "dots":
                self.next()
                b = self.parse_int()
                if b < a:
                    tok = self.peek()
                    raise RecipeError(f"descending range {a}..{b}", tok[2], tok[3])
                positions.update(range(a, b + 1))
            else:
                positions.add(a)
            if self.peek()[1] == ",":
                self.next()
                continue
            break
        self.expect("punct", "}")
        return tuple(sorted(positions))


def parse_recipe(text: str) -> RecipeAST:
    return _Parser(text).parse()


def _format_posset(positions: tuple) -> str:
    # collapse consecutive runs back to a..b
    runs = []
    start = prev = positions[0]
    for p in positions[1:]:
        if p == prev + 1:
            prev = p
            continue
        runs.append((start, prev))
        start = prev = p
    runs.append((start, prev))
    parts = [f"{a}" if a == b else f"{a}..{b}" for a, b in runs]
    return "{" + ", ".join(parts) + "}"


def format_recipe(ast: RecipeAST) -> str:
    """Pretty-print an AST; parse(format(ast)) == ast."""
    lines = []
    for stmt in ast.statements:
        c = stmt.call
        if c.op == "bch":
            body = ", ".join(str(a) for a in c.args)
        elif c.op == "cyclic":
            body = f'{c.args[0]}, {c.args[1]}, "{c.args[2]}"'
        elif c.op in ("extend", "dual"):
            body = c.args[0]
        elif c.op in ("shorten", "puncture"):
            body = f"{c.args[0]}, {_format_posset(c.args[1])}"
        elif c.op == "plotkin":
            body = f"{c.args[0]}, {c.args[1]}"
        elif c.op == "load":
            body = f'"{c.args[0]}"'
        else:  # pragma: no cover
            raise RecipeError(f"unknown op {c.op}")
        lines.append(f"{stmt.name} = {c.op}({body})")
    return "\n".join(lines) + "\n"


def eval_recipe(ast: RecipeAST, working_dir: str = ".") -> LinearCode:
    """Evaluate statements in order; the last statement is the result."""
    env = {}
    result = None
    for stmt in ast.statements:
        c = stmt.call
        try:
            if c.op == "bch":
                F = field_for_order(c.args[0])
                b = c.args[3] if len(c.args) > 3 else 1
                val = codes.bch_code(F, c.args[1], c.args[2], b)
            elif c.op == "cyclic":
                F = field_for_order(c.args[0])
                g = poly_from_string(F, c.args[2])
                val = codes.cyclic_code(F, c.args[1], g)
            elif c.op == "extend":
                val = codes.extend(env[c.args[0]])
            elif c.op == "dual":
                val = codes.dual(env[c.args[0]])
            elif c.op == "shorten":
                val = codes.shorten(env[c.args[0]], c.args[1])
            elif c.op == "puncture":
                val = codes.puncture(env[c.args[0]], c.args[1])
            elif c.op == "plotkin":
                a, b = env[c.args[0]], env[c.args[1]]
                if a.field is not b.field:
                    raise ValueError("mixed-field plotkin")
                val = codes.plotkin_sum(a, b)
            elif c.op == "load":
                path = c.args[0]
                if not os.path.isabs(path):
                    path = os.path.join(working_dir, path)
                val = codes.load_code(path)
            else:  # pragma: no cover
                raise ValueError(f"unknown op {c.op}")
        except RecipeError:
            raise
        except (ValueError, OSError, ZeroDivisionError) as exc:
            raise RecipeError(f"in {stmt.name!r}: {exc}", c.line, c.col) from exc
        env[stmt.name] = val
        result = val
    return result


def load_recipe(path) -> RecipeAST:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_recipe(fh.read())
