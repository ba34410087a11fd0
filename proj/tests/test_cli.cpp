#include <doctest.h>

#include <fstream>
#include <sstream>

#include "halfrep/cli.hpp"
#include "halfrep/output.hpp"

using namespace halfrep;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(HALFREP_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

} // namespace

TEST_CASE("solve") {
  auto r = run({"solve", "3", "5", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out == R"({"kind":"representation","a":"3","b":"5","k":"4","delta":1,"x":"1","y":"0"})"
                 "\n");

  r = run({"--format", "json", "solve", "3", "5"});
  CHECK(r.code == 0);
  CHECK(OutputRecord::parse_json_line(r.out).integer("x") == 1);

  r = run({"solve", "11", "31"});
  CHECK(r.code == 0);
  CHECK(r.out == "150 = 8*11 + 2*31 + 0\n");

  r = run({"solve", "3", "5", "--format", "csv"});
  CHECK(r.out == "a,b,k,delta,x,y\n3,5,4,1,1,0\n");

  r = run({"solve", "4", "6"});
  CHECK(r.code == 2);
  CHECK(r.err.find("not coprime") != std::string::npos);
  CHECK(r.out.empty());

  CHECK(run({"solve", "3x", "5"}).code == 2);
  CHECK(run({"solve", "0", "5"}).code == 2);
  CHECK(run({"solve", "3"}).code == 2);
  CHECK(run({"solve", "3", "5", "--format", "xml"}).code == 2);
}

TEST_CASE("solve takes arbitrarily large operands") {
  // 10^60 + 1 and 10^60 are coprime
  const std::string a = "1" + std::string(59, '0') + "1";
  const std::string b = "1" + std::string(60, '0');
  auto r = run({"solve", a, b, "--format", "json"});
  REQUIRE(r.code == 0);
  const auto rec = OutputRecord::parse_json_line(r.out);
  const Integer A(a), B(b);
  CHECK(rec.integer("x") * A + rec.integer("y") * B + rec.integer("delta") == rec.integer("k"));
  CHECK(rec.integer("k") == (A - 1) * (B - 1) / 2);
}

TEST_CASE("fib-table matches golden files byte for byte") {
  auto r = run({"fib-table", "--kind", "consecutive", "--from", "3", "--to", "14", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == read_golden("consecutive_3_14.csv"));

  r = run({"fib-table", "--kind", "skip", "--from", "1", "--to", "12", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == read_golden("skip_1_12.csv"));

  // repeat: output is deterministic
  CHECK(run({"fib-table", "--kind", "skip", "--from", "1", "--to", "12", "--format", "csv"}).out ==
        r.out);
}

TEST_CASE("fib-table other formats and ranges") {
  auto r = run({"fib-table", "--kind", "skip", "--from", "1", "--to", "12"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 13);

  r = run({"fib-table", "--kind", "consecutive", "--from", "6", "--to", "7", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        R"({"kind":"fib-table-row","pair_kind":"consecutive","n":"6","f_left":"8","f_right":"13","equation":1,"x":"2","y":"2"})"
        "\n"
        R"({"kind":"fib-table-row","pair_kind":"consecutive","n":"7","f_left":"13","f_right":"21","equation":1,"x":"6","y":"2"})"
        "\n");

  r = run({"fib-table", "--kind", "consecutive", "--from", "5", "--to", "3", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());

  CHECK(run({"fib-table", "--kind", "consecutive", "--from", "2", "--to", "5"}).code == 2);
  CHECK(run({"fib-table", "--kind", "skip", "--from", "0", "--to", "5"}).code == 2);
  CHECK(run({"fib-table", "--kind", "lucas", "--from", "1", "--to", "5"}).code == 2);
  CHECK(run({"fib-table", "--kind", "skip", "--from", "1"}).code == 2);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--scope", "theorem1", "--max", "200"});
  CHECK(r.code == 0);
  CHECK(r.out.find("pairs=12231 pass=12231 fail=0") != std::string::npos);

  r = run({"verify", "--scope", "closed-forms", "--max", "120", "--jobs", "3"});
  CHECK(r.code == 0);
  r = run({"verify", "--scope", "cyclotomic", "--max", "60"});
  CHECK(r.code == 0);
  CHECK(r.out == "cyclotomic pairs=136 pass=136 fail=0\n");

  r = run({"verify", "--scope", "identities", "--max", "50", "--format", "json"});
  CHECK(r.code == 0);
  const auto rec = OutputRecord::parse_json_line(r.out);
  CHECK(rec.integer("cases") == 50);
  CHECK(rec.integer("fail") == 0);

  r = run({"verify", "--scope", "all", "--max", "20", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("scope,max,cases,pass,fail\n", 0) == 0);

  CHECK(run({"verify", "--scope", "bogus"}).code == 2);
  CHECK(run({"verify", "--jobs", "0"}).code == 2);
  CHECK(run({"verify", "--max", "-4"}).code == 2);
}

TEST_CASE("cyclo") {
  auto r = run({"cyclo", "3", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("midterm degree 4\n") != std::string::npos);
  CHECK(r.out.find("midterm coefficient -1\n") != std::string::npos);
  CHECK(r.out.find("alpha=0 beta=1 delta=1") != std::string::npos);

  r = run({"cyclo", "2", "3", "--coeffs"});
  CHECK(r.code == 0);
  CHECK(r.out.size() >= 7);
  CHECK(r.out.substr(r.out.size() - 7) == "1 -1 1\n");

  r = run({"cyclo", "11", "31", "--format", "json"});
  CHECK(r.code == 0);
  const auto rec = OutputRecord::parse_json_line(r.out);
  CHECK(rec.integer("alpha") == 2);
  CHECK(rec.integer("beta") == 8);
  CHECK(rec.integer("delta") == 0);
  CHECK(rec.integer("mid_degree") == 150);

  r = run({"cyclo", "4", "5"});
  CHECK(r.code == 2);
  CHECK(r.err.find("4 is not prime") != std::string::npos);
  CHECK(run({"cyclo", "5", "5"}).code == 2);
  CHECK(run({"cyclo", "99999999999999999999999", "5"}).code == 2);
  CHECK(run({"cyclo", "1000003", "1000033"}).code == 2);
}

TEST_CASE("representable") {
  auto r = run({"representable", "8", "3", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "8 = 1*3 + 1*5\n");
  r = run({"representable", "7", "3", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "not representable\n");
  r = run({"representable", "0", "3", "5"});
  CHECK(r.out == "0 = 0*3 + 0*5\n");
  r = run({"representable", "7", "3", "5", "--format", "json"});
  CHECK(r.out == R"({"kind":"representable","n":"7","a":"3","b":"5","status":"not-representable"})"
                 "\n");
  CHECK(run({"representable", "8", "4", "6"}).code == 2);
  CHECK(run({"representable", "-1", "3", "5"}).code == 2);
}

TEST_CASE("help and usage") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}
