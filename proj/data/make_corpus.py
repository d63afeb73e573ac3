#!/usr/bin/env python3
"""Regenerate the synthesized half of the bundled mini-corpus.

Every emitted file is plain ASCII, indented with four spaces, terminated by a
newline and accepted by ``ast.parse``.  Output is fully determined by --seed.

    python3 data/make_corpus.py --out data/corpus/synth --count 180 --seed 7
"""

import argparse
import ast
import os
import random

NOUNS = [
    "user", "order", "item", "record", "config", "session", "buffer", "node",
    "graph", "path", "message", "request", "response", "token", "cache",
    "queue", "event", "score", "value", "result", "count", "index", "name",
    "data", "key", "table", "row", "column", "matrix", "vector", "image",
    "model", "layer", "batch", "sample", "account", "invoice", "ticket",
    "report", "entry", "payload", "header", "chunk", "packet", "frame",
    "window", "widget", "handler", "worker", "job", "task", "price",
]
VERBS = [
    "get", "set", "load", "save", "parse", "build", "compute", "update",
    "process", "render", "validate", "fetch", "send", "read", "write",
    "merge", "split", "filter", "sort", "find", "create", "delete", "reset",
    "apply", "encode", "decode", "normalize", "collect", "register", "format",
]
MODULES = [
    ("os", None), ("sys", None), ("json", None), ("re", None), ("math", None),
    ("time", None), ("logging", None), ("random", None), ("itertools", None),
    ("collections", "defaultdict"), ("collections", "OrderedDict"),
    ("os.path", "join"), ("functools", "reduce"), ("datetime", "datetime"),
    ("typing", "List"), ("typing", "Dict"), ("hashlib", None), ("csv", None),
]
COMMON_STRINGS = [
    "utf-8", "id", "name", "type", "value", "data", "error", "status", "ok",
    "r", "w", "rb", "key", "default", "path", "url", "GET", "POST", "%s",
    "", " ", ",", "\\n", "{}", "true", "false", "user", "admin",
]
COMMON_NUMBERS = ["0", "1", "2", "3", "10", "100", "0.5", "1.0", "255", "1024", "-1", "60", "8"]


class Gen:
    def __init__(self, rng):
        self.rng = rng
        self.lines = []
        self.locals = []

    # -- names ---------------------------------------------------------------
    def noun(self):
        return self.rng.choice(NOUNS)

    def var(self):
        r = self.rng.random()
        if self.locals and r < 0.55:
            return self.rng.choice(self.locals)
        if r < 0.8:
            return self.noun()
        return self.noun() + "_" + self.rng.choice(NOUNS)

    def func_name(self):
        return self.rng.choice(VERBS) + "_" + self.noun()

    def class_name(self):
        return self.noun().capitalize() + self.rng.choice(["Manager", "Store", "Parser", "Builder", "Client", "Service", "Handler", "View"])

    # -- literals ------------------------------------------------------------
    def string(self):
        r = self.rng.random()
        if r < 0.55:
            s = self.rng.choice(COMMON_STRINGS)
        elif r < 0.8:
            s = self.noun() + self.rng.choice(["", "_" + self.noun(), "-" + str(self.rng.randint(0, 99))])
        else:
            s = "".join(self.rng.choice("abcdefghijklmnopqrstuvwxyz _:-/.%") for _ in range(self.rng.randint(1, 14)))
        q = self.rng.choice(["'", "'", '"'])
        prefix = self.rng.choice(["", "", "", "", "", "r", "b"]) if "\\" not in s else ""
        return prefix + q + s + q

    def number(self):
        r = self.rng.random()
        if r < 0.6:
            return self.rng.choice(COMMON_NUMBERS).lstrip("-")
        if r < 0.8:
            return str(self.rng.randint(0, 5000))
        if r < 0.9:
            return "%d.%d" % (self.rng.randint(0, 99), self.rng.randint(0, 99))
        return self.rng.choice(["0x%x" % self.rng.randint(0, 4095), "1e-%d" % self.rng.randint(1, 9), "1_000", "2j"])

    # -- expressions ---------------------------------------------------------
    def atom(self, depth):
        r = self.rng.random()
        if r < 0.35:
            return self.var()
        if r < 0.5:
            return self.string()
        if r < 0.62:
            return self.number()
        if r < 0.7:
            return self.rng.choice(["None", "True", "False"])
        if r < 0.8 and depth < 3:
            return self.call(depth + 1)
        if r < 0.86 and depth < 3:
            return self.var() + "." + self.noun()
        if r < 0.9 and depth < 3:
            return self.var() + "[" + self.expr(depth + 1) + "]"
        if r < 0.94 and depth < 3:
            return "[" + ", ".join(self.expr(depth + 1) for _ in range(self.rng.randint(0, 3))) + "]"
        if r < 0.97 and depth < 3:
            k = self.rng.randint(0, 3)
            return "{" + ", ".join(self.string() + ": " + self.expr(depth + 1) for _ in range(k)) + "}"
        return "(" + self.expr(depth + 1) + ")" if depth < 3 else self.var()

    def call(self, depth):
        r = self.rng.random()
        if r < 0.3:
            f = self.rng.choice(["len", "str", "int", "float", "list", "dict", "sorted", "print", "range", "isinstance", "sum", "max", "min", "enumerate", "zip", "open"])
        elif r < 0.6:
            f = self.var() + "." + self.rng.choice(VERBS + ["append", "get", "items", "keys", "join", "strip", "split", "format", "pop", "update"])
        else:
            f = self.func_name()
        args = [self.expr(depth + 1) for _ in range(self.rng.randint(0, 3))]
        if self.rng.random() < 0.2:
            args.append(self.noun() + "=" + self.expr(depth + 1))
        return f + "(" + ", ".join(args) + ")"

    def expr(self, depth=0):
        if depth > 3:
            return self.var()
        r = self.rng.random()
        if r < 0.55:
            return self.atom(depth)
        if r < 0.7:
            op = self.rng.choice(["+", "-", "*", "/", "//", "%", "**", "|", "&", "<<", ">>", "^", "@"])
            return self.atom(depth + 1) + " " + op + " " + self.atom(depth + 1)
        if r < 0.8:
            return self.call(depth + 1)
        if r < 0.85:
            return self.rng.choice(["not ", "-", "~"]) + self.atom(depth + 1)
        if r < 0.9:
            v = self.rng.choice(["x", "item", "k", "v", "i"])
            return "[" + v + " for " + v + " in " + self.var() + (" if " + v + self.rng.choice([" > 0", " is not None", ""]) if self.rng.random() < 0.5 else "") + "]"
        if r < 0.93:
            return self.atom(depth + 1) + " if " + self.cond(depth + 1) + " else " + self.atom(depth + 1)
        if r < 0.96:
            return "lambda " + self.rng.choice(["x", "a, b", ""]) + ": " + self.atom(depth + 1)
        return self.var() + "[" + self.rng.choice(["1:", ":-1", "::2", "a:b", ":"]) + "]"

    def cond(self, depth=0):
        r = self.rng.random()
        if r < 0.4:
            return self.atom(depth + 1) + " " + self.rng.choice(["==", "!=", "<", ">", "<=", ">=", "in", "not in", "is", "is not"]) + " " + self.atom(depth + 1)
        if r < 0.6:
            return self.cond(depth + 2) + " " + self.rng.choice(["and", "or"]) + " " + self.cond(depth + 2) if depth < 2 else self.var()
        if r < 0.75:
            return "not " + self.var()
        return self.expr(depth + 1)

    # -- statements ----------------------------------------------------------
    def emit(self, level, text):
        self.lines.append("    " * level + text)

    def simple(self, level):
        r = self.rng.random()
        if r < 0.3:
            v = self.var()
            self.emit(level, v + " = " + self.expr())
            if v not in self.locals:
                self.locals.append(v)
        elif r < 0.4:
            self.emit(level, self.var() + " " + self.rng.choice(["+=", "-=", "*=", "/=", "|=", "&=", "//=", "%=", "**=", "<<=", ">>=", "^=", "@="]) + " " + self.atom(1))
        elif r < 0.6:
            self.emit(level, self.call(0))
        elif r < 0.65:
            self.emit(level, self.var() + "." + self.noun() + " = " + self.expr())
        elif r < 0.7:
            self.emit(level, self.var() + "[" + self.atom(2) + "] = " + self.expr())
        elif r < 0.74:
            self.emit(level, "assert " + self.cond())
        elif r < 0.78:
            a, b = self.noun(), self.noun()
            self.emit(level, a + ", " + b + " = " + self.var() + ", " + self.var())
            self.locals += [a, b]
        elif r < 0.8:
            self.emit(level, "del " + self.var() + "[" + self.atom(2) + "]")
        elif r < 0.83:
            self.emit(level, self.var() + ": " + self.rng.choice(["int", "str", "list", "dict", "float"]) + " = " + self.atom(1))
        elif r < 0.86:
            self.emit(level, "logger." + self.rng.choice(["info", "debug", "warning", "error"]) + "(" + self.string() + ", " + self.var() + ")")
        else:
            self.emit(level, self.var() + " = " + self.call(0))

    def block(self, level, budget, in_loop=False, in_func=False):
        n = self.rng.randint(1, max(1, budget))
        for _ in range(n):
            self.stmt(level, budget - 1, in_loop, in_func)

    def stmt(self, level, budget, in_loop, in_func):
        r = self.rng.random()
        if budget <= 0 or r < 0.5:
            self.simple(level)
            if in_loop and self.rng.random() < 0.05:
                self.emit(level, self.rng.choice(["break", "continue"]))
            return
        if r < 0.62:
            self.emit(level, "if " + self.cond() + ":")
            self.block(level + 1, budget - 1, in_loop, in_func)
            if self.rng.random() < 0.3:
                self.emit(level, "elif " + self.cond() + ":")
                self.block(level + 1, budget - 1, in_loop, in_func)
            if self.rng.random() < 0.4:
                self.emit(level, "else:")
                self.block(level + 1, budget - 1, in_loop, in_func)
        elif r < 0.72:
            v = self.rng.choice(["item", "x", "i", "entry", "row", self.noun()])
            if self.rng.random() < 0.3:
                self.emit(level, "for i, " + v + " in enumerate(" + self.var() + "):")
                self.locals.append("i")
            elif self.rng.random() < 0.3:
                self.emit(level, "for " + v + " in range(" + self.number() + "):")
            else:
                self.emit(level, "for " + v + " in " + self.var() + ":")
            self.locals.append(v)
            self.block(level + 1, budget - 1, True, in_func)
        elif r < 0.77:
            self.emit(level, "while " + self.cond() + ":")
            self.block(level + 1, budget - 1, True, in_func)
        elif r < 0.85:
            self.emit(level, "try:")
            self.block(level + 1, budget - 1, in_loop, in_func)
            exc = self.rng.choice(["Exception", "ValueError", "KeyError", "IOError", "TypeError", "(ValueError, TypeError)"])
            self.emit(level, "except " + exc + (" as exc:" if self.rng.random() < 0.5 else ":"))
            if self.rng.random() < 0.3:
                self.emit(level + 1, "raise")
            else:
                self.block(level + 1, 1, in_loop, in_func)
            if self.rng.random() < 0.2:
                self.emit(level, "finally:")
                self.block(level + 1, 1, in_loop, in_func)
        elif r < 0.9:
            f = self.noun() + "_file"
            self.emit(level, "with open(" + self.var() + ", " + self.rng.choice(["'r'", "'w'", "'rb'"]) + ") as " + f + ":")
            self.locals.append(f)
            self.block(level + 1, budget - 1, in_loop, in_func)
        elif in_func and r < 0.95:
            self.emit(level, "return " + self.expr())
        elif in_func:
            self.emit(level, "yield " + self.var())
        else:
            self.simple(level)

    def function(self, level, method=False):
        saved = self.locals
        params = ["self"] if method else []
        defaulted = False
        for _ in range(self.rng.randint(0, 3)):
            p = self.noun()
            if p in params:
                continue
            r = self.rng.random()
            if r < 0.25 or defaulted:
                defaulted = True
                p += "=" + self.rng.choice(["None", "0", "True", "False", self.string()])
            elif r < 0.35:
                p += ": " + self.rng.choice(["int", "str", "list"])
            params.append(p)
        if self.rng.random() < 0.1:
            params.append("*args")
        if self.rng.random() < 0.1:
            params.append("**kwargs")
        self.locals = [p.split("=")[0].split(":")[0].strip("*") for p in params]
        if self.rng.random() < 0.1:
            self.emit(level, "@" + self.rng.choice(["staticmethod", "property", "functools.lru_cache(maxsize=None)"]) if method else "@" + self.rng.choice(["functools.lru_cache(maxsize=None)", "register"]))
            if method and self.lines[-1].strip() == "@staticmethod":
                params = params[1:]
        ret = " -> " + self.rng.choice(["int", "str", "bool", "None", "list"]) if self.rng.random() < 0.15 else ""
        self.emit(level, "def " + self.func_name() + "(" + ", ".join(params) + ")" + ret + ":")
        if self.rng.random() < 0.3:
            self.emit(level + 1, '"""' + self.rng.choice(VERBS).capitalize() + " the " + self.noun() + '."""')
        self.block(level + 1, self.rng.randint(2, 4), False, True)
        if self.rng.random() < 0.6:
            self.emit(level + 1, "return " + self.expr())
        self.locals = saved

    def klass(self):
        base = self.rng.choice(["", "(object)", "(Exception)", "(" + self.class_name() + ")", "(dict)"])
        self.emit(0, "class " + self.class_name() + base + ":")
        if self.rng.random() < 0.4:
            self.emit(1, '"""' + self.noun().capitalize() + " " + self.rng.choice(NOUNS) + ' holder."""')
        if self.rng.random() < 0.3:
            self.emit(1, self.noun().upper() + " = " + self.atom(2))
        self.emit(1, "def __init__(self, " + self.noun() + "=None):")
        for _ in range(self.rng.randint(1, 4)):
            self.emit(2, "self." + self.noun() + " = " + self.rng.choice([self.atom(2), "None", "[]", "{}"]))
        for _ in range(self.rng.randint(1, 3)):
            self.lines.append("")
            self.function(1, method=True)

    def module(self):
        if self.rng.random() < 0.5:
            self.emit(0, '"""' + self.rng.choice(VERBS).capitalize() + " " + self.noun() + " " + self.rng.choice(["utilities", "helpers", "models", "views"]) + '."""')
        mods = self.rng.sample(MODULES, self.rng.randint(1, 4))
        for mod, name in mods:
            if name is None:
                self.emit(0, "import " + mod)
            else:
                self.emit(0, "from " + mod + " import " + name)
        if self.rng.random() < 0.5:
            self.emit(0, "logger = logging.getLogger(__name__)")
        self.lines.append("")
        for _ in range(self.rng.randint(1, 3)):
            self.lines.append("")
            if self.rng.random() < 0.35:
                self.klass()
            elif self.rng.random() < 0.2:
                self.emit(0, self.noun().upper() + " = " + self.expr())
            else:
                self.function(0)
        if self.rng.random() < 0.3:
            self.lines.append("")
            self.lines.append("")
            self.emit(0, "if __name__ == '__main__':")
            self.emit(1, self.func_name() + "()")
        if self.rng.random() < 0.2:
            self.lines.insert(self.rng.randint(1, len(self.lines)), "# " + self.rng.choice(VERBS) + " " + self.noun())
        return "\n".join(self.lines).rstrip("\n") + "\n"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", required=True)
    ap.add_argument("--count", type=int, default=180)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    rng = random.Random(args.seed)
    made = 0
    while made < args.count:
        src = Gen(rng).module()
        if len(src) > 3500:
            continue
        try:
            ast.parse(src)
        except SyntaxError:
            continue
        with open(os.path.join(args.out, "gen_%03d.py" % made), "w", encoding="ascii", newline="\n") as fh:
            fh.write(src)
        made += 1


if __name__ == "__main__":
    main()
