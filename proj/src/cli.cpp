// Copyright (c) 2026 The radixnet Authors. All Rights Reserved.
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

#include "radixnet/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <new>

#include "CLI11.hpp"
#include "radixnet/error.hpp"
#include "radixnet/io.hpp"
#include "radixnet/topology.hpp"
#include "radixnet/verify.hpp"

namespace radixnet {

namespace {

struct Options {
  std::string spec_path;
  std::string out_dir;
  std::string format = "mm";
  bool strict = false;
};

RadixNetSpec load_spec(const std::string& path, std::ostream& err) {
  RadixNetSpec spec = parse_spec(read_text_file(path));
  for (const std::string& w : spec.warnings()) err << "warning: " << w << "\n";
  return spec;
}

int cmd_generate(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto format = parse_format(opt.format);
  if (!format) {
    err << "error: unknown format \"" << opt.format << "\" (expected mm or tsv)\n";
    return kExitUsage;
  }
  const RadixNetSpec spec = load_spec(opt.spec_path, err);
  const LayeredTopology net = build_radix_net(spec);
  const VerificationReport report = verify(net, spec);

  std::vector<OutputFile> files = render_layers(net, *format);
  files.push_back({"report.json", export_report(report, spec)});
  for (const auto& path : write_files(opt.out_dir, files)) {
    out << path.string() << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  const RadixNetSpec spec = load_spec(opt.spec_path, err);
  const LayeredTopology net = build_radix_net(spec);
  const VerificationReport r = verify(net, spec);
  const auto flag = [](bool b) { return b ? "true" : "false"; };

  out << "symmetric: " << flag(r.is_symmetric)
      << ", paths: " << r.path_count_min
      << ", density: " << numerator(r.measured_density) << "/"
      << denominator(r.measured_density) << "\n";
  out << "path_connected: " << flag(r.is_path_connected)
      << ", fnnt_valid: " << flag(r.fnnt_valid) << "\n";
  out << "closed-form paths: " << r.theoretical_path_count
      << (r.path_count_matches ? " (match)" : " (MISMATCH)") << "\n";
  out << "closed-form density: " << numerator(r.theoretical_density) << "/"
      << denominator(r.theoretical_density)
      << (r.density_matches ? " (match)" : " (MISMATCH)") << "\n";

  const bool printed_agrees = r.printed_eq5_value == r.path_count_min;
  out << "printed_eq5_value: " << r.printed_eq5_value
      << (printed_agrees ? " (agrees with enumeration)"
                         : " (disagrees with enumeration)")
      << "\n";

  if (!r.passed()) {
    err << "verification failed\n";
    return kExitVerifyFailed;
  }
  if (opt.strict && !printed_agrees) {
    err << "strict: printed closed form predicts " << r.printed_eq5_value
        << " paths per input/output pair, enumeration counts "
        << r.path_count_min << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_stats(const Options& opt, std::ostream& out, std::ostream& err) {
  const RadixNetSpec spec = load_spec(opt.spec_path, err);
  const LayeredTopology net = build_radix_net(spec);
  out << export_report(verify(net, spec), spec);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Generate and verify RadiX-Net sparse topologies", "radixnet"};
  app.require_subcommand(1);
  Options opt;

  auto* generate = app.add_subcommand("generate", "Build a network and export it");
  generate->add_option("--spec", opt.spec_path, "Spec JSON file")->required();
  generate->add_option("--out", opt.out_dir, "Output directory")->required();
  generate->add_option("--format", opt.format, "mm (Matrix Market) or tsv");

  auto* verify_cmd = app.add_subcommand("verify", "Build a network and check it");
  verify_cmd->add_option("--spec", opt.spec_path, "Spec JSON file")->required();
  verify_cmd->add_flag("--strict", opt.strict,
                       "Also fail when the printed closed form disagrees");

  auto* stats = app.add_subcommand("stats", "Print the report JSON");
  stats->add_option("--spec", opt.spec_path, "Spec JSON file")->required();

  try {
    std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1),
                                      args.end());
    std::reverse(reversed.begin(), reversed.end());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(opt, out, err);
    if (verify_cmd->parsed()) return cmd_verify(opt, out, err);
    return cmd_stats(opt, out, err);
  } catch (const ParseError& e) {
    err << "spec parse error: " << e.what() << "\n";
    return kExitSpecError;
  } catch (const SpecError& e) {
    for (const std::string& v : e.violations()) err << "spec error: " << v << "\n";
    return kExitSpecError;
  } catch (const SizeOverflow& e) {
    err << "spec error: " << e.what() << "\n";
    return kExitSpecError;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return e.path() == std::filesystem::path(opt.spec_path) ? kExitNoInput
                                                            : kExitIoError;
  } catch (const std::bad_alloc&) {
    err << "internal error: out of memory\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace radixnet
