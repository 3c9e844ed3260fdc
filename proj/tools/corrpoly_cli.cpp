// Copyright 2026 The corrpoly Authors
//
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

// corrpoly: command-line front end over the C API in corrpoly.h.
//
// Exit codes: 0 success, 1 input error, 2 size cap exceeded, 3 at least
// one verdict disagrees with the dataset's expected label.

#include <corrpoly.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitSizeCap = 2;
constexpr int kExitMismatch = 3;

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(cp_status status) {
  return status == CP_ERR_SIZE_CAP ? kExitSizeCap : kExitInput;
}

void check(cp_status status) {
  if (status != CP_OK) throw Failure{exit_code_for(status), cp_last_error()};
}

struct StringDeleter {
  void operator()(char* s) const { cp_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct DatasetDeleter {
  void operator()(cp_dataset* d) const { cp_dataset_free(d); }
};
using Dataset = std::unique_ptr<cp_dataset, DatasetDeleter>;

struct ReportDeleter {
  void operator()(cp_report* r) const { cp_report_free(r); }
};
using Report = std::unique_ptr<cp_report, ReportDeleter>;

struct SystemDeleter {
  void operator()(cp_system* s) const { cp_system_free(s); }
};
using System = std::unique_ptr<cp_system, SystemDeleter>;

cp_format parse_format(const std::string& name) {
  return name == "structured" ? CP_FORMAT_STRUCTURED : CP_FORMAT_TABLE;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Failure{kExitInput, "cannot write '" + out_path + "'"};
  out << text;
}

struct DatasetArgs {
  std::string items_path;
  std::string pairs_path;
  bool bundled = false;
};

void add_dataset_options(CLI::App* cmd, DatasetArgs& args) {
  cmd->add_option("items", args.items_path, "Items CSV (pair_id,item_name,mu_a1,mu_a2,mu_and,expected_label)");
  cmd->add_option("--pairs-file", args.pairs_path, "Pairs CSV (pair_id,name_a1,name_a2,name_conjunction)");
  cmd->add_flag("--bundled", args.bundled, "Use the bundled Hampton (1988) experiment 4 data");
}

Dataset open_dataset(const DatasetArgs& args) {
  if (args.bundled == !args.items_path.empty()) {
    throw Failure{kExitInput, "give either an items file or --bundled"};
  }
  cp_dataset* raw = nullptr;
  if (args.bundled) {
    check(cp_dataset_bundled(&raw));
  } else {
    check(cp_dataset_load(args.pairs_path.c_str(), args.items_path.c_str(), &raw));
  }
  return Dataset(raw);
}

// "1,2" or "1,2;1,3" or "1,2 2,3"
std::vector<unsigned> parse_pairs(const std::vector<std::string>& specs) {
  std::vector<unsigned> flat;
  for (const auto& spec : specs) {
    std::string normalized = spec;
    for (char& c : normalized) {
      if (c == ';') c = ' ';
    }
    std::istringstream chunks(normalized);
    std::string chunk;
    while (chunks >> chunk) {
      unsigned i = 0;
      unsigned j = 0;
      char comma = 0;
      std::istringstream in(chunk);
      if (!(in >> i >> comma >> j) || comma != ',' || !in.eof()) {
        throw Failure{kExitInput, "invalid pair '" + chunk + "', expected i,j"};
      }
      flat.push_back(i);
      flat.push_back(j);
    }
  }
  return flat;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlation-polytope analysis of concept membership weights"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cp_version()));

  std::string format = "table";
  std::string out_path;
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output rendering")
        ->check(CLI::IsMember({"table", "structured"}));
    cmd->add_option("--out", out_path, "Write the output to a file instead of stdout");
  };

  DatasetArgs classify_args;
  std::string classify_pair;
  unsigned threads = 0;
  auto* classify = app.add_subcommand("classify", "Classify every item of a dataset");
  add_dataset_options(classify, classify_args);
  classify->add_option("--pair", classify_pair, "Restrict to one pair_id");
  classify->add_option("--threads", threads, "Worker threads (0 = all cores)");
  add_output(classify);

  std::vector<std::string> weights;
  auto* witness = app.add_subcommand("witness", "Diagnose one point (mu(A1), mu(A2), mu(A1 and A2))");
  witness->add_option("weights", weights, "p1 p2 p12 as decimals or fractions")
      ->expected(3)
      ->required();
  add_output(witness);

  unsigned n = 0;
  std::vector<std::string> pair_specs;
  bool all_pairs = false;
  unsigned facet_cap = 0;
  auto* facets = app.add_subcommand("facets", "List the facet inequalities of c(n, S)");
  facets->add_option("--n", n, "Number of concepts")->required();
  facets->add_option("--pairs", pair_specs, "Measured pairs, e.g. 1,2 (repeatable, or 1,2;1,3)");
  facets->add_flag("--all-pairs", all_pairs, "Use every pair i < j");
  facets->add_option("--facet-cap", facet_cap, "Largest n for facet enumeration (default 4)");
  add_output(facets);

  DatasetArgs plot_args;
  std::string plot_pair;
  auto* plot = app.add_subcommand("plotdata", "Emit polytope and item coordinates for one pair");
  add_dataset_options(plot, plot_args);
  plot->add_option("--pair", plot_pair, "pair_id to plot")->required();
  plot->add_option("--out", out_path, "Write the output to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*classify) {
      Dataset ds = open_dataset(classify_args);
      cp_report* raw = nullptr;
      check(cp_classify(ds.get(), classify_pair.empty() ? nullptr : classify_pair.c_str(), threads,
                        &raw));
      Report report(raw);
      char* text = nullptr;
      check(cp_report_render(report.get(), parse_format(format), &text));
      emit(OwnedString(text).get(), out_path);
      return cp_report_mismatch_count(report.get()) > 0 ? kExitMismatch : kExitOk;
    }
    if (*witness) {
      char* text = nullptr;
      check(cp_witness(weights[0].c_str(), weights[1].c_str(), weights[2].c_str(),
                       parse_format(format), &text, nullptr));
      emit(OwnedString(text).get(), out_path);
      return kExitOk;
    }
    if (*facets) {
      std::vector<unsigned> flat;
      if (all_pairs) {
        for (unsigned i = 1; i <= n; ++i) {
          for (unsigned j = i + 1; j <= n; ++j) {
            flat.push_back(i);
            flat.push_back(j);
          }
        }
      } else {
        flat = parse_pairs(pair_specs);
      }
      cp_system* raw = nullptr;
      check(cp_system_create_with_limits(n, flat.data(), flat.size() / 2, 0, facet_cap, &raw));
      System system(raw);
      char* text = nullptr;
      check(cp_facets(system.get(), parse_format(format), &text, nullptr));
      emit(OwnedString(text).get(), out_path);
      return kExitOk;
    }
    if (*plot) {
      Dataset ds = open_dataset(plot_args);
      char* text = nullptr;
      check(cp_plotdata(ds.get(), plot_pair.c_str(), &text));
      emit(OwnedString(text).get(), out_path);
      return kExitOk;
    }
  } catch (const Failure& f) {
    std::cerr << "corrpoly: " << f.message << "\n";
    return f.exit_code;
  }
  return kExitInput;
}
