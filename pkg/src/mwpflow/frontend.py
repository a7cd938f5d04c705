"""Parser for the analyzable C subset.

The subset: function definitions over ``int`` parameters and locals whose
bodies use declarations, assignments of an atom or of one binary ``+``,
``-`` or ``*`` between atoms, ``if``/``else``, ``while``, empty statements,
``return`` and blocks.  Anything else is rejected with a located diagnostic
naming the construct.  Parsing proper is delegated to pycparser.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

from pycparser import c_ast, c_parser

# ---------------------------------------------------------------- diagnostics


@dataclass(frozen=True)
class Location:
    file: str
    line: int
    column: int

    def __str__(self) -> str:
        return f"{self.file}:{self.line}:{self.column}"


class FrontendError(Exception):
    category = "error"

    def __init__(self, location: Location, message: str):
        super().__init__(f"{location}: {self.category}: {message}")
        self.location = location
        self.message = message

    def diagnostic(self) -> str:
        return f"{self.location}: {self.category}: {self.message}"


class CSyntaxError(FrontendError):
    category = "syntax error"


class UnsupportedConstruct(FrontendError):
    category = "unsupported construct"

    def __init__(self, location: Location, construct: str, hint: str = ""):
        message = construct + (f" ({hint})" if hint else "")
        super().__init__(location, message)
        self.construct = construct


class UndeclaredVariable(FrontendError):
    category = "undeclared variable"

    def __init__(self, location: Location, name: str):
        super().__init__(location, f"'{name}' is used but never declared")
        self.name = name


class DuplicateDeclaration(FrontendError):
    category = "duplicate declaration"

    def __init__(self, location: Location, name: str):
        super().__init__(location, f"'{name}' is declared more than once")
        self.name = name


# ------------------------------------------------------------------------ AST

_NOWHERE = Location("<ast>", 0, 0)


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    value: int


Atom = Union[Var, Const]


@dataclass(frozen=True)
class BinOp:
    op: str
    left: Atom
    right: Atom


Expr = Union[Var, Const, BinOp]


@dataclass(frozen=True)
class Assign:
    target: str
    expr: Expr
    location: Location = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class If:
    then: tuple
    orelse: tuple = ()
    location: Location = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class While:
    body: tuple
    location: Location = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class Skip:
    location: Location = field(default=_NOWHERE, compare=False)


Stmt = Union[Assign, If, While, Skip]


@dataclass(frozen=True)
class FunctionDef:
    name: str
    params: tuple[str, ...]
    body: tuple
    # (name, location) of every local declaration, in source order
    declarations: tuple[tuple[str, Location], ...] = ()
    location: Location = field(default=_NOWHERE, compare=False)

    @property
    def declared_vars(self) -> list[str]:
        return [name for name, _ in self.declarations]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FunctionDef):
            return NotImplemented
        return (
            self.name == other.name
            and self.params == other.params
            and self.body == other.body
            and self.declared_vars == other.declared_vars
        )

    __hash__ = None


@dataclass(frozen=True)
class Program:
    functions: tuple[FunctionDef, ...]

    def function(self, name: str) -> FunctionDef:
        for f in self.functions:
            if f.name == name:
                return f
        raise KeyError(name)


ARITH_OPS = ("+", "-", "*")

# ------------------------------------------------------------ preprocessing

_IGNORED_DIRECTIVES = ("include", "pragma")


def _strip(source: str, filename: str) -> str:
    """Blank out comments and harmless directives, keeping every position."""
    out = []
    i, n = 0, len(source)
    line, col = 1, 1
    at_line_start = True
    while i < n:
        ch = source[i]
        if source.startswith("//", i):
            j = source.find("\n", i)
            j = n if j < 0 else j
            out.append(" " * (j - i))
            col += j - i
            i = j
            continue
        if source.startswith("/*", i):
            j = source.find("*/", i + 2)
            if j < 0:
                raise CSyntaxError(Location(filename, line, col), "unterminated comment")
            chunk = source[i:j + 2]
            out.append(re.sub(r"[^\n]", " ", chunk))
            nl = chunk.count("\n")
            if nl:
                line += nl
                col = len(chunk) - chunk.rfind("\n")
            else:
                col += len(chunk)
            i = j + 2
            continue
        if ch == "#" and at_line_start:
            j = source.find("\n", i)
            j = n if j < 0 else j
            directive = source[i:j]
            m = re.match(r"#\s*(\w*)", directive)
            name = m.group(1) if m else ""
            if name not in _IGNORED_DIRECTIVES:
                raise UnsupportedConstruct(
                    Location(filename, line, col), f"preprocessor directive #{name}"
                )
            out.append(" " * len(directive))
            i = j
            continue
        if ch == "\n":
            line, col = line + 1, 1
            at_line_start = True
        else:
            col += 1
            if not ch.isspace():
                at_line_start = False
        out.append(ch)
        i += 1
    return "".join(out)


# -------------------------------------------------------------------- parsing

_ERR_WITH_POS = re.compile(r"^(.*?):(\d+):(\d+): (.*)$", re.S)
_ERR_NO_POS = re.compile(r"^(.*?): (.*)$", re.S)


def parse(source_text: str, filename: str = "<input>") -> Program:
    """Parse C source into a :class:`Program` or raise a FrontendError."""
    text = _strip(source_text, filename)
    try:
        tree = c_parser.CParser().parse(text, filename)
    except c_parser.ParseError as exc:
        raise _syntax_error(str(exc), filename, text) from None
    except Exception as exc:  # pycparser occasionally fails outside ParseError
        raise CSyntaxError(Location(filename, 1, 1), f"cannot parse: {exc}") from None
    return _Translator(filename).program(tree)


def _syntax_error(msg: str, filename: str, text: str) -> CSyntaxError:
    m = _ERR_WITH_POS.match(msg)
    if m:
        return CSyntaxError(Location(filename, int(m[2]), int(m[3])), m[4])
    m = _ERR_NO_POS.match(msg)
    last = max(text.count("\n"), 1)
    return CSyntaxError(Location(filename, last, 1), m[2] if m else msg)


_BAD_STATEMENTS = {
    c_ast.For: "for loop",
    c_ast.DoWhile: "do-while loop",
    c_ast.Switch: "switch statement",
    c_ast.Case: "switch statement",
    c_ast.Default: "switch statement",
    c_ast.Goto: "goto statement",
    c_ast.Label: "labeled statement",
    c_ast.Break: "break statement",
    c_ast.Continue: "continue statement",
    c_ast.FuncCall: "function call",
    c_ast.Typedef: "typedef",
    c_ast.Pragma: "pragma",
}

_BAD_EXPRESSIONS = {
    c_ast.FuncCall: "function call",
    c_ast.ArrayRef: "array access",
    c_ast.StructRef: "struct member access",
    c_ast.Cast: "cast",
    c_ast.TernaryOp: "conditional expression",
    c_ast.Assignment: "assignment inside an expression",
    c_ast.ExprList: "comma expression",
    c_ast.CompoundLiteral: "compound literal",
    c_ast.InitList: "initializer list",
}

_UNARY_NAMES = {
    "*": "pointer dereference",
    "&": "address-of operator",
    "++": "increment operator",
    "p++": "increment operator",
    "--": "decrement operator",
    "p--": "decrement operator",
    "sizeof": "sizeof operator",
}


def _int_literal(text: str) -> int:
    body = text.rstrip("uUlL")
    if body.lower().startswith("0x"):
        return int(body, 16)
    if body.lower().startswith("0b"):
        return int(body, 2)
    if len(body) > 1 and body.startswith("0"):
        return int(body, 8)
    return int(body)


class _Translator:
    def __init__(self, filename: str):
        self.filename = filename
        self.declared: set[str] = set()
        self.declarations: list[tuple[str, Location]] = []

    def loc(self, node) -> Location:
        coord = getattr(node, "coord", None)
        if coord is None:
            return Location(self.filename, 1, 1)
        return Location(self.filename, coord.line or 1, coord.column or 1)

    # ---- top level

    def program(self, tree: c_ast.FileAST) -> Program:
        functions = []
        names: set[str] = set()
        for ext in tree.ext:
            if isinstance(ext, c_ast.FuncDef):
                f = self.function(ext)
                if f.name in names:
                    raise DuplicateDeclaration(f.location, f.name)
                names.add(f.name)
                functions.append(f)
            elif isinstance(ext, c_ast.Decl) and isinstance(ext.type, c_ast.FuncDecl):
                raise UnsupportedConstruct(
                    self.loc(ext), "function declaration without a body"
                )
            elif isinstance(ext, c_ast.Decl):
                raise UnsupportedConstruct(self.loc(ext), "global declaration")
            else:
                raise UnsupportedConstruct(self.loc(ext), self._node_name(ext))
        if not functions:
            raise CSyntaxError(Location(self.filename, 1, 1), "no function definition found")
        return Program(tuple(functions))

    @staticmethod
    def _node_name(node) -> str:
        return _BAD_STATEMENTS.get(type(node), type(node).__name__)

    def function(self, node: c_ast.FuncDef) -> FunctionDef:
        self.declared = set()
        self.declarations = []
        if node.param_decls:
            raise UnsupportedConstruct(self.loc(node), "K&R-style parameter declarations")
        fdecl = node.decl.type
        self._check_return_type(fdecl.type)
        params: list[str] = []
        for p in (fdecl.args.params if fdecl.args else []):
            if isinstance(p, c_ast.EllipsisParam):
                raise UnsupportedConstruct(self.loc(p), "variadic parameters")
            if isinstance(p, c_ast.Typename) and p.name is None:
                if self._type_names(p.type) == ["void"]:
                    continue
            self._check_int_decl(p)
            if p.name in params:
                raise DuplicateDeclaration(self.loc(p), p.name)
            params.append(p.name)
        self.declared = set(params)
        body = self.block(node.body)
        return FunctionDef(
            node.decl.name,
            tuple(params),
            body,
            tuple(self.declarations),
            self.loc(node.decl),
        )

    def _type_names(self, t) -> list[str] | None:
        if isinstance(t, c_ast.TypeDecl) and isinstance(t.type, c_ast.IdentifierType):
            return list(t.type.names)
        return None

    def _check_type(self, t, where, allowed) -> None:
        if isinstance(t, c_ast.PtrDecl):
            raise UnsupportedConstruct(self.loc(where), "pointer declarator")
        if isinstance(t, c_ast.ArrayDecl):
            raise UnsupportedConstruct(self.loc(where), "array declarator")
        if isinstance(t, c_ast.FuncDecl):
            raise UnsupportedConstruct(self.loc(where), "function pointer or nested declaration")
        names = self._type_names(t)
        if names is None:
            raise UnsupportedConstruct(self.loc(where), "struct, union or enum type")
        if names not in allowed:
            raise UnsupportedConstruct(
                self.loc(where), f"non-integer type '{' '.join(names)}'", "only int is analyzed"
            )

    def _check_return_type(self, t) -> None:
        self._check_type(t, t, (["int"], ["void"]))

    def _check_int_decl(self, decl) -> None:
        if getattr(decl, "quals", None) or getattr(decl, "storage", None):
            quals = " ".join((decl.quals or []) + (decl.storage or []))
            raise UnsupportedConstruct(self.loc(decl), f"qualifier '{quals}'")
        self._check_type(decl.type, decl, (["int"],))

    # ---- statements

    def block(self, node) -> tuple:
        if node is None:
            return ()
        if isinstance(node, c_ast.Compound):
            out: list = []
            for item in node.block_items or []:
                out.extend(self.statement(item))
            return tuple(out)
        return tuple(self.statement(node))

    def statement(self, node) -> list:
        if isinstance(node, c_ast.Compound):
            return list(self.block(node))
        if isinstance(node, c_ast.Decl):
            return self.declaration(node)
        if isinstance(node, c_ast.DeclList):
            out = []
            for d in node.decls:
                out.extend(self.declaration(d))
            return out
        if isinstance(node, c_ast.Assignment):
            return [self.assignment(node)]
        if isinstance(node, c_ast.If):
            self.guard(node.cond)
            return [If(self.block(node.iftrue), self.block(node.iffalse), self.loc(node))]
        if isinstance(node, c_ast.While):
            self.guard(node.cond)
            return [While(self.block(node.stmt), self.loc(node))]
        if isinstance(node, c_ast.EmptyStatement):
            return [Skip(self.loc(node))]
        if isinstance(node, c_ast.Return):
            # returned values do not flow anywhere inside the function
            if node.expr is not None:
                self.guard(node.expr)
            return [Skip(self.loc(node))]
        if isinstance(node, c_ast.UnaryOp):
            name = _UNARY_NAMES.get(node.op, f"unary operator '{node.op}'")
            raise UnsupportedConstruct(self.loc(node), name, "write x = x + 1 instead")
        if type(node) in _BAD_STATEMENTS:
            raise UnsupportedConstruct(self.loc(node), _BAD_STATEMENTS[type(node)])
        raise UnsupportedConstruct(self.loc(node), f"{type(node).__name__} statement")

    def declaration(self, node: c_ast.Decl) -> list:
        if isinstance(node.type, c_ast.FuncDecl):
            raise UnsupportedConstruct(self.loc(node), "nested function declaration")
        self._check_int_decl(node)
        self.declarations.append((node.name, self.loc(node)))
        self.declared.add(node.name)
        if node.init is None:
            return []
        return [Assign(node.name, self.expression(node.init), self.loc(node))]

    def assignment(self, node: c_ast.Assignment) -> Assign:
        if node.op != "=":
            raise UnsupportedConstruct(
                self.loc(node),
                f"compound assignment '{node.op}'",
                "write it as x = x op y",
            )
        target = node.lvalue
        if not isinstance(target, c_ast.ID):
            raise UnsupportedConstruct(self.loc(target), self._expr_name(target))
        return Assign(target.name, self.expression(node.rvalue), self.loc(node))

    # ---- expressions

    def _expr_name(self, node) -> str:
        if isinstance(node, c_ast.UnaryOp):
            return _UNARY_NAMES.get(node.op, f"unary operator '{node.op}'")
        return _BAD_EXPRESSIONS.get(type(node), f"{type(node).__name__} expression")

    def atom(self, node) -> Atom | None:
        if isinstance(node, c_ast.ID):
            return Var(node.name)
        if isinstance(node, c_ast.Constant):
            if node.type not in ("int", "unsigned int", "long int", "unsigned long int",
                                 "long long int", "unsigned long long int"):
                raise UnsupportedConstruct(self.loc(node), f"{node.type} constant")
            return Const(_int_literal(node.value))
        if (
            isinstance(node, c_ast.UnaryOp)
            and node.op in ("-", "+")
            and isinstance(node.expr, c_ast.Constant)
        ):
            c = self.atom(node.expr)
            return Const(-c.value if node.op == "-" else c.value)
        return None

    def expression(self, node) -> Expr:
        a = self.atom(node)
        if a is not None:
            return a
        if isinstance(node, c_ast.BinaryOp):
            if node.op not in ARITH_OPS:
                raise UnsupportedConstruct(self.loc(node), f"operator '{node.op}'")
            left, right = self.atom(node.left), self.atom(node.right)
            for side, val in ((node.left, left), (node.right, right)):
                if val is None:
                    if isinstance(side, c_ast.BinaryOp):
                        raise UnsupportedConstruct(
                            self.loc(node),
                            "n-ary expression",
                            "split it into several assignments of one operation each",
                        )
                    raise UnsupportedConstruct(self.loc(side), self._expr_name(side))
            return BinOp(node.op, left, right)
        raise UnsupportedConstruct(self.loc(node), self._expr_name(node))

    def guard(self, node) -> None:
        """Validate a condition; conditions contribute no flow."""
        if isinstance(node, c_ast.ID):
            if node.name not in self.declared:
                raise UndeclaredVariable(self.loc(node), node.name)
        elif isinstance(node, c_ast.Constant):
            self.atom(node)
        elif isinstance(node, c_ast.BinaryOp):
            self.guard(node.left)
            self.guard(node.right)
        elif isinstance(node, c_ast.UnaryOp) and node.op in ("!", "-", "+", "~"):
            self.guard(node.expr)
        else:
            raise UnsupportedConstruct(self.loc(node), self._expr_name(node))


# ---------------------------------------------------------- variable scoping


def collect_variables(f: FunctionDef) -> list[str]:
    """Parameters in order, then locals in order of declaration."""
    seen: set[str] = set(f.params)
    out = list(f.params)
    for name, loc in f.declarations:
        if name in seen:
            raise DuplicateDeclaration(loc, name)
        seen.add(name)
        out.append(name)
    _check_uses(f.body, seen)
    return out


def _check_uses(stmts, declared: set[str]) -> None:
    for s in stmts:
        if isinstance(s, Assign):
            names = [s.target]
            e = s.expr
            if isinstance(e, BinOp):
                names += [a.name for a in (e.left, e.right) if isinstance(a, Var)]
            elif isinstance(e, Var):
                names.append(e.name)
            for n in names:
                if n not in declared:
                    raise UndeclaredVariable(s.location, n)
        elif isinstance(s, If):
            _check_uses(s.then, declared)
            _check_uses(s.orelse, declared)
        elif isinstance(s, While):
            _check_uses(s.body, declared)


# ------------------------------------------------------------ pretty printing


def _fmt_atom(a: Atom) -> str:
    return a.name if isinstance(a, Var) else str(a.value)


def _fmt_expr(e: Expr) -> str:
    if isinstance(e, BinOp):
        return f"{_fmt_atom(e.left)} {e.op} {_fmt_atom(e.right)}"
    return _fmt_atom(e)


def _fmt_block(stmts, depth: int) -> list[str]:
    pad = "    " * depth
    lines = []
    for s in stmts:
        if isinstance(s, Assign):
            lines.append(f"{pad}{s.target} = {_fmt_expr(s.expr)};")
        elif isinstance(s, Skip):
            lines.append(f"{pad};")
        elif isinstance(s, While):
            lines.append(f"{pad}while (1) {{")
            lines += _fmt_block(s.body, depth + 1)
            lines.append(f"{pad}}}")
        elif isinstance(s, If):
            lines.append(f"{pad}if (1) {{")
            lines += _fmt_block(s.then, depth + 1)
            lines.append(f"{pad}}} else {{")
            lines += _fmt_block(s.orelse, depth + 1)
            lines.append(f"{pad}}}")
    return lines


def format_program(program: Program) -> str:
    """Render a Program back to C (guards print as ``1``)."""
    chunks = []
    for f in program.functions:
        params = ", ".join(f"int {p}" for p in f.params) or "void"
        lines = [f"int {f.name}({params}) {{"]
        lines += [f"    int {name};" for name in f.declared_vars]
        lines += _fmt_block(f.body, 1)
        lines.append("}")
        chunks.append("\n".join(lines))
    return "\n\n".join(chunks) + "\n"
