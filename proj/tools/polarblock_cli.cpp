// Copyright 2026 The polarblock Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// polarblock: command-line front end over the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polarblock/polarblock.h"

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3 };

// Thrown to unwind with a specific exit code after printing a message.
struct ExitError {
  int code;
  std::string message;
};

int ExitFor(pb_status s) {
  switch (s) {
    case PB_OK: return kOk;
    case PB_ERR_BUDGET_EXCEEDED: return kBudget;
    case PB_ERR_INVALID_ARGUMENT:
    case PB_ERR_UNSUPPORTED:
    case PB_ERR_PARSE: return kUsage;
    case PB_ERR_CHECK_FAILED:
    case PB_ERR_INTERNAL: return kCheckFailed;
  }
  return kCheckFailed;
}

void Check(pb_status s) {
  if (s != PB_OK) throw ExitError{ExitFor(s), std::string(pb_status_name(s)) + ": " + pb_last_error()};
}

struct SpaceDeleter {
  void operator()(pb_space* p) const { pb_space_free(p); }
};
struct SetDeleter {
  void operator()(pb_set* p) const { pb_set_free(p); }
};
using SpaceHandle = std::unique_ptr<pb_space, SpaceDeleter>;
using SetHandle = std::unique_ptr<pb_set, SetDeleter>;

std::string TakeString(char* s) {
  std::string out(s ? s : "");
  pb_string_free(s);
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ExitError{kUsage, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ExitError{kUsage, "cannot write " + path};
  out << text << '\n';
  if (!out) throw ExitError{kUsage, "write failed for " + path};
}

struct SpaceArgs {
  std::string kind;
  int rank = 0;
  int q = 0;
  std::string space_file;

  void Add(CLI::App* cmd, bool allow_file) {
    auto* k = cmd->add_option("--kind", kind, "q, qminus, qplus, h or h-odd")
                  ->check(CLI::IsMember({"q", "qminus", "qplus", "h", "h-odd"}));
    auto* r = cmd->add_option("--rank", rank, "polar rank")->check(CLI::PositiveNumber);
    auto* o = cmd->add_option("--q", q, "field order (base order for hermitian kinds)")->check(CLI::Range(2, 1 << 20));
    k->needs(r)->needs(o);
    if (allow_file) {
      auto* f = cmd->add_option("--space", space_file, "space JSON written by 'space build'")->check(CLI::ExistingFile);
      f->excludes(k)->excludes(r)->excludes(o);
    }
  }

  SpaceHandle Build() const {
    std::string kd = kind;
    int rk = rank;
    int qq = q;
    std::optional<std::string> hash;
    if (!space_file.empty()) {
      const Json j = Json::parse(ReadFile(space_file));
      kd = j.at("kind").get<std::string>();
      rk = j.at("rank").get<int>();
      qq = j.at("q").get<int>();
      hash = j.at("hash").get<std::string>();
    }
    if (kd.empty()) throw ExitError{kUsage, "a space is required: --kind/--rank/--q or --space"};
    pb_space* raw = nullptr;
    Check(pb_space_build(kd.c_str(), rk, qq, &raw));
    SpaceHandle sp(raw);
    if (hash) {
      char* h = nullptr;
      Check(pb_space_hash(sp.get(), &h));
      if (TakeString(h) != *hash) throw ExitError{kUsage, "space hash mismatch for " + space_file};
    }
    return sp;
  }
};

SetHandle LoadSet(const std::string& path) {
  const std::string text = ReadFile(path);
  pb_set* raw = nullptr;
  Check(pb_set_from_json(text.c_str(), &raw));
  return SetHandle(raw);
}

std::string TextValue(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void PrintText(const Json& j, const std::string& indent = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it->is_object()) {
      std::cout << indent << it.key() << ":\n";
      PrintText(*it, indent + "  ");
    } else {
      std::cout << indent << it.key() << ": " << TextValue(*it) << '\n';
    }
  }
}

class Emitter {
 public:
  explicit Emitter(const std::string* format) : format_(format) {}
  void operator()(const Json& j) const {
    if (*format_ == "json")
      std::cout << j.dump(2) << '\n';
    else
      PrintText(j);
  }

 private:
  const std::string* format_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generator blocking sets in finite classical polar spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pb_version()));
  std::string format = "text";
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
  const Emitter emit(&format);

  std::function<int()> action;

  // space build | stats
  auto* space_cmd = app.add_subcommand("space", "build or inspect a polar space");
  space_cmd->require_subcommand(1);
  SpaceArgs build_args;
  std::string build_out;
  bool build_full = false;
  auto* build_cmd = space_cmd->add_subcommand("build", "build a space and report it");
  build_args.Add(build_cmd, false);
  build_cmd->add_option("--out", build_out, "write the space JSON here");
  build_cmd->add_flag("--full", build_full, "include points and generators in the JSON");
  build_cmd->callback([&] {
    action = [&] {
      SpaceHandle sp = build_args.Build();
      char* s = nullptr;
      Check(pb_space_to_json(sp.get(), build_full ? 1 : 0, &s));
      const std::string text = TakeString(s);
      if (!build_out.empty()) WriteFile(build_out, text);
      emit(Json::parse(text));
      return int{kOk};
    };
  });
  SpaceArgs stats_args;
  auto* stats_cmd = space_cmd->add_subcommand("stats", "counts and regularity of a space");
  stats_args.Add(stats_cmd, true);
  stats_cmd->callback([&] {
    action = [&] {
      SpaceHandle sp = stats_args.Build();
      char* s = nullptr;
      Check(pb_space_to_json(sp.get(), 0, &s));
      const Json j = Json::parse(TakeString(s));
      emit(Json{{"space", j.at("name")},
                {"hash", j.at("hash")},
                {"points", j.at("counts").at("points")},
                {"generators", j.at("counts").at("generators")},
                {"s", j.at("params").at("s")},
                {"t", j.at("params").at("t")},
                {"regular", j.at("regular")}});
      return int{kOk};
    };
  });

  // construct
  SpaceArgs con_args;
  std::string con_example;
  std::string con_seed;
  std::string con_out;
  bool con_matrices = false;
  auto* con_cmd = app.add_subcommand("construct", "build a blocking set");
  con_args.Add(con_cmd, true);
  con_cmd->add_option("--example", con_example, "pencil, ruling, ruling:1, section-cover or cone:<row>")->required();
  con_cmd->add_option("--seed", con_seed, "JSON object {vertex|hyperplane: rows}, or @file");
  con_cmd->add_option("--out", con_out, "write the blocking-set JSON here");
  con_cmd->add_flag("--matrices", con_matrices, "include generator matrices");
  con_cmd->callback([&] {
    action = [&] {
      SpaceHandle sp = con_args.Build();
      const std::string seed = !con_seed.empty() && con_seed[0] == '@' ? ReadFile(con_seed.substr(1)) : con_seed;
      pb_set* raw = nullptr;
      Check(pb_construct(sp.get(), con_example.c_str(), seed.empty() ? nullptr : seed.c_str(), &raw));
      SetHandle set(raw);
      char* s = nullptr;
      Check(pb_set_to_json(set.get(), con_matrices ? 1 : 0, &s));
      const std::string text = TakeString(s);
      if (con_out.empty()) {
        std::cout << text << '\n';
      } else {
        WriteFile(con_out, text);
        int n = 0;
        Check(pb_set_size(set.get(), &n));
        emit(Json{{"example", con_example}, {"size", n}, {"out", con_out}});
      }
      return int{kOk};
    };
  });

  // verify
  std::string verify_set;
  auto* verify_cmd = app.add_subcommand("verify", "check a blocking-set file");
  verify_cmd->add_option("--set", verify_set, "blocking-set JSON")->required()->check(CLI::ExistingFile);
  verify_cmd->callback([&] {
    action = [&] {
      SetHandle set = LoadSet(verify_set);
      char* s = nullptr;
      Check(pb_verify_json(set.get(), &s));
      const Json j = Json::parse(TakeString(s));
      emit(j);
      bool ok = j.at("blocking").get<bool>();
      if (j.contains("section2") && j["section2"].at("applicable").get<bool>())
        ok = ok && j["section2"].at("passed").get<bool>();
      return ok ? int{kOk} : int{kCheckFailed};
    };
  });

  // classify
  std::string classify_set;
  bool classify_strip = false;
  auto* classify_cmd = app.add_subcommand("classify", "label a minimal blocking set");
  classify_cmd->add_option("--set", classify_set, "blocking-set JSON")->required()->check(CLI::ExistingFile);
  classify_cmd->add_flag("--strip", classify_strip, "remove inessential members first");
  classify_cmd->callback([&] {
    action = [&] {
      SetHandle set = LoadSet(classify_set);
      char* s = nullptr;
      Check(pb_classify_json(set.get(), classify_strip ? 1 : 0, &s));
      const Json j = Json::parse(TakeString(s));
      emit(j);
      return j.at("verified").get<bool>() ? int{kOk} : int{kCheckFailed};
    };
  });

  // search
  SpaceArgs search_args;
  std::string search_mode;
  std::optional<int> search_bound;
  std::optional<std::uint64_t> search_nodes;
  std::optional<double> search_secs;
  int search_workers = 1;
  std::optional<std::size_t> search_max_witnesses;
  std::string search_out;
  auto* search_cmd = app.add_subcommand("search", "exact searches");
  search_cmd->add_option("mode", search_mode, "min-blocking, enumerate-minimal, min-cover or min-maximal-spread")
      ->required()
      ->check(CLI::IsMember({"min-blocking", "enumerate-minimal", "min-cover", "min-maximal-spread"}));
  search_args.Add(search_cmd, true);
  search_cmd->add_option("--bound", search_bound, "upper bound (size limit for enumerate-minimal)")
      ->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--budget-nodes", search_nodes, "node budget")->check(CLI::PositiveNumber);
  search_cmd->add_option("--budget-secs", search_secs, "wall-clock budget")->check(CLI::PositiveNumber);
  search_cmd->add_option("--workers", search_workers, "worker threads")->check(CLI::Range(1, 256));
  search_cmd->add_option("--max-witnesses", search_max_witnesses, "cap on stored witnesses (0 = all)");
  search_cmd->add_option("--out", search_out, "write the result JSON here");
  search_cmd->callback([&] {
    action = [&] {
      SpaceHandle sp = search_args.Build();
      Json o{{"workers", search_workers}};
      if (search_bound) o["bound"] = *search_bound;
      if (search_nodes) o["budget_nodes"] = *search_nodes;
      if (search_secs) o["budget_secs"] = *search_secs;
      if (search_max_witnesses) o["max_witnesses"] = *search_max_witnesses;
      const std::string opts = o.dump();
      char* s = nullptr;
      Check(pb_search_json(sp.get(), search_mode.c_str(), opts.c_str(), &s));
      const std::string text = TakeString(s);
      if (!search_out.empty()) WriteFile(search_out, text);
      Json j = Json::parse(text);
      if (format == "text" && j.at("witnesses").size() > 10) {
        j["witnesses_shown"] = 10;
        Json head = Json::array();
        for (std::size_t i = 0; i < 10; ++i) head.push_back(j["witnesses"][i]);
        j["witnesses"] = head;
      }
      emit(j);
      return j.at("complete").get<bool>() ? int{kOk} : int{kBudget};
    };
  });

  // thresholds
  int th_q = 0;
  auto* th_cmd = app.add_subcommand("thresholds", "theorem thresholds and epsilon for q");
  th_cmd->add_option("--q", th_q, "field order")->required()->check(CLI::Range(2, 1 << 20));
  th_cmd->callback([&] {
    action = [&] {
      char* s = nullptr;
      Check(pb_thresholds_json(th_q, &s));
      emit(Json::parse(TakeString(s)));
      return int{kOk};
    };
  });

  // accept
  std::vector<int> acc_only;
  int acc_workers = 1;
  auto* acc_cmd = app.add_subcommand("accept", "run the acceptance suite");
  acc_cmd->add_option("--only", acc_only, "criterion ids")->delimiter(',')->check(CLI::Range(1, 11));
  acc_cmd->add_option("--workers", acc_workers, "worker threads")->check(CLI::Range(1, 256));
  acc_cmd->callback([&] {
    action = [&] {
      const std::string opts = Json{{"only", acc_only}, {"workers", acc_workers}}.dump();
      char* s = nullptr;
      int passed = 0;
      Check(pb_accept_json(opts.c_str(), &s, &passed));
      const Json j = Json::parse(TakeString(s));
      if (format == "json") {
        emit(j);
      } else {
        for (const Json& c : j.at("criteria")) std::cout << c.at("line").get<std::string>() << '\n';
      }
      return passed ? int{kOk} : int{kCheckFailed};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const ExitError& e) {
    std::cerr << "polarblock: " << e.message << '\n';
    return e.code;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "polarblock: json: " << e.what() << '\n';
    return kUsage;
  }
}
