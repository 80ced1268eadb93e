#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "doctest.h"
#include "tweq/io.hpp"

using namespace tweq;

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Sandbox {
 public:
  Sandbox() : dir_(fs::temp_directory_path() / ("tweq_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Sandbox() { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  Run run(const std::string& args, const std::string& env = "") const {
    const fs::path out = dir_ / "stdout", err = dir_ / "stderr";
    const std::string cmd = env + " \"" TWEQ_CLI_PATH "\" " + args + " >\"" + out.string() +
                            "\" 2>\"" + err.string() + "\"";
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
  }

 private:
  fs::path dir_;
};

const char* kInversion6 =
    R"j({"actor": "cyclic(2)", "module": {"invariant_factors": [6]},
        "act": [[0,1,2,3,4,5],[0,5,4,3,2,1]]})j";
const char* kHyperelliptic2 =
    R"j({"genus": 2, "group": "cyclic(2)", "quotient_genus": 0,
        "branch": [[0,2],[1,2],[2,2],[3,2],[4,2],[5,2]], "boundary_images": [1,1,1,1,1,1]})j";

}  // namespace

TEST_CASE("cohomology subcommand") {
  Sandbox box;
  const std::string action = box.file("inv6.json", kInversion6);
  Run r = box.run("cohomology --action " + action);
  REQUIRE(r.code == 0);
  auto j = io::parse_json(r.out, "stdout");
  CHECK(j["invariant_factors"] == io::Json::array({2}));
  CHECK(j["degree"] == 2);

  r = box.run("cohomology --action " + action + " --degree 1 --output " + box.path("h1.json"));
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  CHECK(io::read_json_file(box.path("h1.json"))["invariant_factors"] == io::Json::array({2}));

  r = box.run("cohomology --action " + action + " --cyclic-norm");
  REQUIRE(r.code == 0);
  CHECK(io::parse_json(r.out, "stdout")["invariant_factors"] == io::Json::array({2}));
}

TEST_CASE("exit codes") {
  Sandbox box;
  const std::string action = box.file("inv6.json", kInversion6);
  CHECK(box.run("--help").code == 0);
  CHECK(box.run("cohomology --action " + action + " --bogus").code == 1);
  CHECK(box.run("").code == 1);
  CHECK(box.run("cohomology --action " + action + " --max-actor-order 0").code == 1);
  CHECK(box.run("cohomology --action " + box.path("missing.json")).code == 3);
  const Run malformed = box.run("cohomology --action " + box.file("bad.json", "{\"actor\":"));
  CHECK(malformed.code == 3);
  CHECK(malformed.err.find("byte") != std::string::npos);
  CHECK(box.run("cohomology --action " + action + " --max-module-order 4").code == 2);
  CHECK(box.run("cohomology --action " + box.file("nokey.json", R"j({"actor":"cyclic(2)"})j")).code == 1);
}

TEST_CASE("twisted-group subcommand") {
  Sandbox box;
  Run r = box.run("twisted-group --spec " +
                  box.file("q.json", R"j({"gamma":"cyclic(2)","g":"cyclic(4)",
                                         "theta":[[0,1,2,3],[0,3,2,1]],"c":[[0,0],[0,2]]})j"));
  REQUIRE(r.code == 0);
  auto j = io::parse_json(r.out, "stdout");
  CHECK(j["valid"] == true);
  CHECK(j["group"]["order"] == 8);

  r = box.run("twisted-group --spec " +
              box.file("bad.json", R"j({"gamma":"cyclic(2)","g":"cyclic(4)","c":[[0,0],[1,2]]})j"));
  CHECK(r.code == 1);
  CHECK(r.err.find("cocycle identity fails at (") != std::string::npos);
  CHECK(io::parse_json(r.out, "stdout")["valid"] == false);
}

TEST_CASE("local-types subcommand") {
  Sandbox box;
  Run r = box.run("local-types --spec " +
                  box.file("sl.json", R"j({"mode":"sl","n":2,"m":2,"central_charge":0})j"));
  REQUIRE(r.code == 0);
  CHECK(io::parse_json(r.out, "stdout")["classes"].size() == 2);

  r = box.run("local-types --spec " +
              box.file("out.json", R"j({"mode":"sl","n":3,"m":2,"central_charge":0,"inner":false})j"));
  CHECK(r.code == 1);

  r = box.run("local-types --spec " +
              box.file("fin.json", R"j({"mode":"finite","gamma":"cyclic(2)","g":"symmetric(3)"})j"));
  REQUIRE(r.code == 0);
  CHECK(io::parse_json(r.out, "stdout")["classes"].size() == 2);
}

TEST_CASE("classify subcommand") {
  Sandbox box;
  const std::string surface = box.file("s.json", kHyperelliptic2);
  Run r = box.run("classify --structure SL2 --surface " + surface + " --chi '[0,1]'");
  REQUIRE(r.code == 0);
  auto j = io::parse_json(r.out, "stdout");
  CHECK(j["label_count"] == 65);
  CHECK(j["labels"].size() == 65);
  CHECK(j["caveats"].size() >= 2);

  r = box.run("classify --structure SL2 --surface " + surface + " --max-labels 10");
  REQUIRE(r.code == 0);
  CHECK(io::parse_json(r.out, "stdout")["labels"].empty());

  CHECK(box.run("classify --structure Nope --surface " + surface).code == 1);
  CHECK(box.run("classify --surface " + surface).code == 1);
  CHECK(box.run("classify --structure SL2 --surface " + surface + " --chi '[1,0]'").code == 1);
}

TEST_CASE("reps subcommand") {
  Sandbox box;
  const std::string surface = box.file("s.json", kHyperelliptic2);
  const std::string twisted = box.file("t.json", R"j({"gamma":"cyclic(2)","g":"cyclic(2)"})j");
  Run r = box.run("reps --presentation " + surface + " --twisted-group " + twisted);
  REQUIRE(r.code == 0);
  CHECK(io::parse_json(r.out, "stdout")["count"] == 32);
  const Run threaded =
      box.run("reps --presentation " + surface + " --twisted-group " + twisted + " --threads 4");
  CHECK(threaded.out == r.out);
  CHECK(box.run("reps --presentation " + surface + " --twisted-group " + twisted +
                " --max-search 3")
            .code == 2);
  CHECK(box.run("reps --presentation " + surface + " --twisted-group " + twisted +
                " --threads 0")
            .code == 1);
}

TEST_CASE("examples subcommand") {
  Sandbox box;
  // The order-3 kernel rows do not reproduce, so the command reports failure.
  Run r = box.run("examples", "NO_COLOR=1");
  CHECK(r.code == 1);
  CHECK(r.out.find("\033[") == std::string::npos);
  CHECK(r.out.find("FAIL") != std::string::npos);
  r = box.run("examples --output -");
  CHECK(r.code == 1);
  CHECK(io::parse_json(r.out, "stdout")["rows"].size() > 20);
}
