#include <doctest.h>

#include "conjprob/rational.hpp"
#include "conjprob/report.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

using namespace conjprob;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr discarded unless asked for.
Run cli(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string("\"") + CONJPROB_CLI + "\" " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string column(const Table& t, std::size_t row, const std::string& name) {
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    if (t.columns[i] == name) return t.rows.at(row).at(i);
  return "<missing " + name + ">";
}

std::string test_path(const char* name) {
  return std::string(CONJPROB_TEST_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("kappa-sn rows") {
  Run r = cli("kappa-sn --max 2 --format json");
  REQUIRE(r.code == 0);
  Table t = table_from_json(r.out);
  REQUIRE(t.rows.size() == 2);
  CHECK(column(t, 0, "n") == "1");
  CHECK(column(t, 0, "kappa") == "1/1");
  CHECK(column(t, 1, "kappa") == "1/2");

  r = cli("kappa-sn --max 13 --format json");
  REQUIRE(r.code == 0);
  t = table_from_json(r.out);
  CHECK(column(t, 12, "n2_kappa") == "314540139254371141/57360633200640000");

  r = cli("kappa-sn --max 15 --cumulative --format json");
  REQUIRE(r.code == 0);
  t = table_from_json(r.out);
  CHECK(column(t, 14, "cumulative") == "4675865182689145531283/1187508508836249600000");

  r = cli("kappa-sn --max 3 --digits 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("0.389") != std::string::npos);
}

TEST_CASE("rho-sn rows") {
  Run r = cli("rho-sn --max 2 --format json");
  REQUIRE(r.code == 0);
  Table t = table_from_json(r.out);
  CHECK(column(t, 0, "rho") == "1/1");
  CHECK(column(t, 1, "rho") == "1/1");

  r = cli("rho-sn --max 10 --format csv");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("5805523/508032") != std::string::npos);

  r = cli("rho-sn --max 30 --cumulative --format json");
  REQUIRE(r.code == 0);
  t = table_from_json(r.out);
  CHECK(parse_rational(column(t, 29, "cumulative")) < make_rational(611806, 100000));
}

TEST_CASE("ceiling breaches exit nonzero with a message") {
  Run r = cli("kappa-sn --max 81", true);
  CHECK(r.code == 2);
  CHECK(r.out.find("ceiling") != std::string::npos);
  r = cli("--rho-ceiling 12 rho-sn --max 13", true);
  CHECK(r.code == 2);
  CHECK(cli("--kappa-ceiling 12 kappa-sn --max 12").code == 0);
}

TEST_CASE("usage errors") {
  CHECK(cli("kappa-sn").code != 0);
  CHECK(cli("verify --suite bogus").code == 2);
  CHECK(cli("kappa-sn --max 3 --format yaml").code != 0);
  CHECK(cli("group").code == 2);
}

TEST_CASE("verify exit codes follow the entries") {
  Run r = cli("verify --suite lemma19 --format json");
  CHECK(r.code == 0);
  auto entries = entries_from_json(r.out);
  CHECK(entries.size() == 5);
  CHECK_FALSE(any_failed(entries));
  CHECK(render_entries(entries, Format::Json) == r.out);

  r = cli("verify --suite lemma19 --exact-cutoff-kappa 20 --format json");
  CHECK(r.code == 1);
  entries = entries_from_json(r.out);
  CHECK(entries.size() == 5);
  CHECK(entries[0].claim == "lemma19.i");
  CHECK(entries[0].status == Status::Fail);
}

TEST_CASE("oracle and gap suites pass") {
  Run r = cli("verify --suite oracles --format json");
  CHECK(r.code == 0);
  auto entries = entries_from_json(r.out);
  bool saw_commute = false;
  for (const auto& e : entries)
    if (e.claim.rfind("oracle.commute.", 0) == 0) {
      saw_commute = true;
      CHECK(e.status == Status::Pass);
    }
  CHECK(saw_commute);

  r = cli("verify --suite gaps --format json");
  CHECK(r.code == 0);
  entries = entries_from_json(r.out);
  int equalities = 0;
  for (const auto& e : entries)
    if (e.claim == "thm1.d8" || e.claim == "thm1.q8" || e.claim == "thm1.d8xc3" ||
        e.claim == "thm1.d8xc5") {
      ++equalities;
      CHECK(e.status == Status::Pass);
      CHECK(e.relation == "==");
    }
  CHECK(equalities == 4);
}

TEST_CASE("progress stays off stdout") {
  Run quiet = cli("verify --suite lemma21 --format json");
  CHECK(quiet.code == 0);
  CHECK_NOTHROW(entries_from_json(quiet.out));
}

TEST_CASE("group command") {
  Run r = cli("group --catalog psl27 --format json");
  REQUIRE(r.code == 0);
  Table t = table_from_json(r.out);
  bool found = false;
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (column(t, i, "property") == "kappa") {
      CHECK(column(t, i, "value") == "3247/14112");
      found = true;
    }
  CHECK(found);
  CHECK(render_table(t, Format::Json) == r.out);

  r = cli("group --catalog d8 --format csv");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("cp,5/8") != std::string::npos);
  CHECK(r.out.find("kappa,7/32") != std::string::npos);

  r = cli("group --catalog c7:c3");
  CHECK(r.code == 0);
  CHECK(r.out.find("13/49") != std::string::npos);

  r = cli("group --catalog psl27 --invariants");
  CHECK(r.code == 0);
  CHECK(r.out.find("{3,4,7,7,8,168}") != std::string::npos);

  CHECK(cli("group --catalog nope").code == 2);
}

TEST_CASE("group files") {
  std::string good = test_path("cli_group_good.txt");
  {
    std::ofstream out(good);
    out << "# C5 : C4\ndegree 5\n(1 2 3 4 5)\n(2 3 5 4)\n";
  }
  Run r = cli("group --file \"" + good + "\" --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.find("order,20") != std::string::npos);
  CHECK(r.out.find("kappa,23/100") != std::string::npos);

  r = cli("group --file \"" + good + "\" --echo");
  CHECK(r.code == 0);
  CHECK(r.out.find("degree 5") != std::string::npos);
  CHECK(r.out.find("# C5") == std::string::npos);

  std::string bad = test_path("cli_group_bad.txt");
  {
    std::ofstream out(bad);
    out << "degree 3\n(1 2)\n(1 2 9)\n";
  }
  r = cli("group --file \"" + bad + "\"", true);
  CHECK(r.code == 2);
  CHECK(r.out.find("line 3") != std::string::npos);
  CHECK(cli("group --file /nonexistent/x.txt").code == 2);
}

TEST_CASE("cache file is transparent") {
  std::string cache = test_path("cli_cache.txt");
  std::remove(cache.c_str());
  Run cold = cli("kappa-sn --max 20 --format json");
  Run fill = cli("--cache \"" + cache + "\" kappa-sn --max 20 --format json");
  Run warm = cli("--cache \"" + cache + "\" kappa-sn --max 20 --format json");
  CHECK(cold.code == 0);
  CHECK(fill.out == cold.out);
  CHECK(warm.out == cold.out);
  std::ifstream in(cache);
  CHECK(in.good());
  {
    std::ofstream out(cache);
    out << "kappa 2 1/2\nkappa 3 seven\n";
  }
  Run broken = cli("--cache \"" + cache + "\" kappa-sn --max 3", true);
  CHECK(broken.code == 2);
  CHECK(broken.out.find("line 2") != std::string::npos);
  std::remove(cache.c_str());
}
