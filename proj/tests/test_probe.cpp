#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "tyco/corpus.hpp"
#include "tyco/probe.hpp"

using namespace tyco;
using namespace tyco::probe;

namespace {

const std::vector<corpus::SourceFile>& sources() {
  static const auto s = corpus::collect_sources(testing::data_dir() / "corpus");
  return s;
}

}  // namespace

TEST_CASE("hand-built verdicts") {
  CHECK(check_prefix("def f(", Checker::Token) == ParseStatus{false, Reason::UnbalancedBracket});
  CHECK(check_prefix("def f(", Checker::Grammar) == ParseStatus{false, Reason::GrammarReject});
  CHECK(check_prefix("x = 'abc", Checker::Token) == ParseStatus{false, Reason::LexError});
  CHECK(check_prefix("x = 'abc", Checker::Grammar) == ParseStatus{false, Reason::LexError});
  CHECK(check_prefix("s = \"\"\"doc\nmore", Checker::Token).reason == Reason::LexError);
  CHECK(check_prefix("if x:\n", Checker::Token) == ParseStatus{false, Reason::DanglingIndent});
  CHECK(check_prefix("if x:\n", Checker::Grammar).reason == Reason::GrammarReject);
  CHECK(check_prefix("x = 1\n    y = 2\n", Checker::Token).reason == Reason::DanglingIndent);
  CHECK(check_prefix("x = (1]", Checker::Token).reason == Reason::UnbalancedBracket);
  CHECK(check_prefix("x = 1)", Checker::Token).reason == Reason::UnbalancedBracket);
  CHECK(check_prefix("if x: pass", Checker::Grammar).parsable);
  CHECK(check_prefix("x = 1", Checker::Grammar).parsable);
  CHECK(check_prefix("x", Checker::Token).parsable);
  CHECK(check_prefix("", Checker::Grammar).parsable);
  CHECK(check_prefix("# only a comment", Checker::Grammar).parsable);
  // Token-level accepts what only the grammar rejects.
  CHECK(check_prefix("x = = 1\n", Checker::Token).parsable);
  CHECK_FALSE(check_prefix("x = = 1\n", Checker::Grammar).parsable);
}

TEST_CASE("grammar subset accepts common constructs") {
  const char* ok[] = {
      "import os, sys as s\nfrom . import a\nfrom ..pkg.mod import (b, c as d,)\nfrom x import *\n",
      "@decorator(arg)\n@other\ndef f(a, b: int = 1, *args, c, d=2, **kw) -> str:\n    return f'{a}'\n",
      "class A(B, metaclass=M):\n    x: int = 0\n    def m(self):\n        pass\n",
      "try:\n    x = 1\nexcept (A, B) as e:\n    raise C() from e\nelse:\n    pass\nfinally:\n    y = 2\n",
      "with open(p) as f, g() as (h, i):\n    data = f.read()\n",
      "for i, (a, b) in enumerate(zip(x, y)):\n    if a > b: continue\n    elif not a: break\nelse:\n    pass\n",
      "while True:\n    x += 1; y -= 2\n",
      "v = [x ** 2 for x in range(10) if x % 2 if x > 3]\nd = {k: v for k, v in items}\ns = {*a, *b}\n",
      "f = lambda x, *y, z=1, **w: x if y else z\n",
      "m = a[1:2, ::3, ...][:, None]\nn = -x + ~y @ z // 2 << 1 | 3 & 4 ^ 5\n",
      "ok = a < b <= c != d is not e not in f in g is h\n",
      "def gen():\n    yield\n    yield from other()\n    x = yield 1\n",
      "async def co():\n    await sleep(1)\n    async with lock:\n        pass\n    async for i in it:\n        pass\n",
      "global g\ndel a[0], b.c\nassert x, 'msg'\nprint(*args, **kwargs, sep='')\n",
      "x = (yield)\nt = 1,\n(a, b), c = d = e\nz = {**base, 'k': 1}\n",
      "s = 'a' 'b' \"c\"\nn = 0x1F + 1e-3 + 2j\n",
  };
  for (const char* src : ok) {
    CAPTURE(src);
    CHECK(check_prefix(src, Checker::Grammar).parsable);
    CHECK(check_prefix(src, Checker::Token).parsable);
  }
  const char* bad[] = {"def (x):\n    pass\n", "return return\n", "class:\n    pass\n", "x = 1 2\n",
                       "try:\n    pass\n", "import\n", "from import x\n", "for x in:\n    pass\n",
                       "lambda: \n", "f(a for)\n", "a = {1: 2, 3}\n", "else:\n    pass\n"};
  for (const char* src : bad) {
    CAPTURE(src);
    CHECK(check_prefix(src, Checker::Grammar) == ParseStatus{false, Reason::GrammarReject});
  }
}

TEST_CASE("every bundled file parses at full length") {
  REQUIRE(sources().size() >= 200);
  for (const auto& s : sources()) {
    CAPTURE(s.path);
    CHECK(check_prefix(s.text, Checker::Grammar).parsable);
    CHECK(check_prefix(s.text, Checker::Token).parsable);
  }
}

TEST_CASE("grammar acceptance implies a token-level pass on every prefix") {
  std::size_t checked = 0;
  for (std::size_t i = 0; i < sources().size(); i += 4) {
    const auto& s = sources()[i];
    scan_file(s.text, Checker::Grammar, s.path, [&](std::size_t end, const ParseStatus& g) {
      if (!g.parsable) return;
      ++checked;
      const auto t = check_prefix(std::string_view(s.text).substr(0, end), Checker::Token);
      if (!t.parsable) FAIL_CHECK(s.path << " prefix " << end << " token-level " << name(t.reason));
    });
  }
  Rng rng(12);
  for (int k = 0; k < 300; ++k) {
    const auto src = testing::fuzz_snippet(rng);
    for (auto end : char_ends(src)) {
      const auto p = std::string_view(src).substr(0, end);
      if (check_prefix(p, Checker::Grammar).parsable) {
        ++checked;
        CHECK(check_prefix(p, Checker::Token).parsable);
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("scan reports") {
  auto empty = scan_file("", Checker::Token, "empty.py");
  CHECK(empty.total_chars == 0);
  CHECK(empty.parsable == 0);
  CHECK(empty.failed == 0);

  const std::string src = "def f(x):\n    return 'caf\xC3\xA9'\n";
  auto r = scan_file(src, Checker::Grammar);
  CHECK(r.total_chars == src.size() - 1);  // two bytes, one character
  CHECK(r.parsable + r.failed == r.total_chars);
  std::size_t by_reason = 0;
  for (const auto& [k, v] : r.reasons) by_reason += v;
  CHECK(by_reason == r.failed);

  std::string names;
  for (int i = 0; i < 50; ++i) names += "name" + std::to_string(i) + "\n";
  auto n = scan_file(names, Checker::Grammar);
  CHECK(n.failed == 0);
  auto agg = aggregate(std::vector<ProbeReport>{n});
  CHECK(agg.success_fraction() == 1.0);

  auto single = aggregate(std::vector<ProbeReport>{r});
  CHECK(single.total_chars == r.total_chars);
  CHECK(single.failure_fraction() == Catch::Approx(static_cast<double>(r.failed) / r.total_chars));
  CHECK_THROWS_AS(aggregate(std::vector<ProbeReport>{}), ContractError);
  CHECK(agg.table().find("Successful executions") != std::string::npos);
}

TEST_CASE("bundled corpus scan: most prefixes fail") {
  std::vector<ProbeReport> reps;
  for (const auto& s : sources()) reps.push_back(scan_file(s.text, Checker::Grammar, s.path));
  auto a = aggregate(reps);
  CHECK(a.files == sources().size());
  CHECK(a.parsable + a.failed == a.total_chars);
  CHECK(a.failure_fraction() > 0.0);
  CHECK(a.failure_fraction() < 1.0);
  CHECK(a.failure_fraction() > 0.5);
}
