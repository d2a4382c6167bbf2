#include "modcat/cli/commands.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "modcat/cli/serialize.hpp"
#include "modcat/errors.hpp"
#include "modcat/exact/format.hpp"
#include "modcat/golden/audit.hpp"

namespace modcat::cli {

namespace {

wzw::AlgebraSpec make_spec(const RunConfig& config) {
  wzw::AlgebraSpec spec;
  spec.rank_type = config.algebra == "sl2" ? wzw::RankType::A1 : wzw::RankType::A2;
  spec.level = config.level;
  return spec;
}

void write_ring(std::ostream& os, const fusion::FusionRing& ring) {
  for (std::size_t a = 0; a < ring.rank(); ++a) {
    for (std::size_t b = a; b < ring.rank(); ++b) {
      os << ring.labels[a] << " ⊗ " << ring.labels[b] << " = " << ring.product_string(a, b) << "\n";
    }
  }
}

void write_values(std::ostream& os, const fusion::FusionRing& ring, const std::vector<exact::CycNum>& values) {
  for (std::size_t i = 0; i < ring.rank(); ++i) os << ring.labels[i] << "  " << exact::render(values[i]) << "\n";
}

void write_s(std::ostream& os, const fusion::ModularData& md) {
  for (std::size_t i = 0; i < md.ring.rank(); ++i) {
    os << md.ring.labels[i] << ":";
    for (std::size_t j = 0; j < md.ring.rank(); ++j) os << (j ? ", " : " ") << exact::render(md.S[i][j]);
    os << "\n";
  }
}

void write_checks(std::ostream& os, const CheckReport& report) {
  for (const auto& item : report.items) {
    os << (item.passed ? "PASS  " : "FAIL  ") << item.name;
    if (!item.detail.empty()) os << ": " << item.detail;
    os << "\n";
  }
}

int cmd_wzw(const RunConfig& config, std::ostream& os) {
  const auto spec = make_spec(config);
  wzw::validate(spec);
  const auto md = wzw::modular_data(spec);
  if (config.json) {
    os << Json{{"kind", "wzw"}, {"algebra", config.algebra}, {"level", config.level}, {"modular_data", to_json(md)}}
              .dump(2)
       << "\n";
    return 0;
  }
  const bool any = config.dims || config.twists || config.fusion || config.s_matrix;
  const int sections = any ? config.dims + config.twists + config.fusion + config.s_matrix : 2;
  auto header = [&](const std::string& name) {
    if (sections > 1) os << "# " << name << "\n";
  };
  if (config.dims || !any) {
    header("dims");
    write_values(os, md.ring, md.dims);
  }
  if (config.twists || !any) {
    header("twists");
    write_values(os, md.ring, md.twists);
  }
  if (config.fusion) {
    header("fusion");
    write_ring(os, md.ring);
  }
  if (config.s_matrix) {
    header("S");
    write_s(os, md);
  }
  return 0;
}

int cmd_condense(const RunConfig& config, std::ostream& os) {
  const auto spec = make_spec(config);
  wzw::validate(spec);
  const auto cc = condense::condense(spec);
  CheckReport checks;
  if (config.check) {
    checks.add("unique up to relabeling", cc.resolution.modular_solutions == 1,
               std::to_string(cc.resolution.solutions.size()) + " ring-level solutions, " +
                   std::to_string(cc.resolution.modular_solutions) + " modular");
    checks.append(fusion::verify_ring(cc.md.ring), "ring: ");
    checks.append(fusion::verify_modular(cc.md), "modular: ");
    const auto n = fusion::verlinde(cc.md);
    checks.add("Verlinde round-trip", n == cc.md.ring.N);
  }
  if (config.json) {
    Json j{{"kind", "condensed"}, {"category", to_json(cc)}};
    if (config.check) {
      Json items = Json::array();
      for (const auto& item : checks.items) {
        items.push_back({{"name", item.name}, {"passed", item.passed}, {"detail", item.detail}});
      }
      j["checks"] = items;
    }
    os << j.dump(2) << "\n";
  } else {
    os << "# simples (" << cc.simples.size() << ")\n";
    for (const auto& s : cc.simples) {
      os << s.name << "  " << wzw::label(spec, s.display) << "  dim " << exact::render(s.dim) << "  twist "
         << exact::render(s.twist) << "  ambient";
      for (const auto& w : s.ambient) os << " " << wzw::label(spec, w);
      os << "\n";
    }
    os << "# fusion\n";
    write_ring(os, cc.md.ring);
    os << "# S\n";
    write_s(os, cc.md);
    if (config.check) {
      os << "# checks\n";
      write_checks(os, checks);
    }
  }
  return checks.passed() ? 0 : 1;
}

int cmd_verify_paper(const RunConfig& config, std::ostream& os) {
  const auto audit = golden::verify_paper(config.data_dir.value_or(golden::default_data_dir()));
  if (config.json) {
    Json j = to_json(audit);
    j["kind"] = "audit";
    os << j.dump(2) << "\n";
    return audit.passed() ? 0 : 1;
  }
  for (const auto& line : audit.lines) {
    os << golden::status_name(line.status) << "  " << line.locus << "  " << line.check;
    if (!line.detail.empty() && (config.verbosity > 0 || line.status != golden::Status::pass)) {
      os << ": " << line.detail;
    }
    os << "\n";
  }
  os << "notes:\n";
  for (const auto& note : audit.notes) os << "  " << note << "\n";
  os << audit.count(golden::Status::pass) << " PASS, " << audit.count(golden::Status::warn) << " WARN, "
     << audit.count(golden::Status::fail) << " FAIL\n";
  return audit.passed() ? 0 : 1;
}

}  // namespace

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  int code = 0;
  try {
    if (config.command == "wzw") {
      code = cmd_wzw(config, buffer);
    } else if (config.command == "condense") {
      code = cmd_condense(config, buffer);
    } else if (config.command == "verify-paper") {
      code = cmd_verify_paper(config, buffer);
    } else {
      err << "unknown command '" << config.command << "'\n";
      return static_cast<int>(ExitCode::usage);
    }
  } catch (const InvalidArgument& e) {
    err << e.what() << "\n";
    return static_cast<int>(ExitCode::usage);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return static_cast<int>(ExitCode::failure);
  }
  if (config.output) {
    std::ofstream file(*config.output, std::ios::binary);
    if (!file) {
      err << "cannot write " << config.output->string() << "\n";
      return static_cast<int>(ExitCode::failure);
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return code;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Exact modular data, Z3 condensation and golden-table verification"};
  app.name("modcat");
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", config.json, "Emit JSON");
    sub->add_option("-o,--output", config.output, "Write to a file instead of stdout");
    sub->add_flag("-v,--verbose", config.verbosity, "More detail");
  };
  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--algebra", config.algebra, "sl2 or sl3")->check(CLI::IsMember({"sl2", "sl3"}))
        ->capture_default_str();
    sub->add_option("--level", config.level, "Level k >= 1")->required()->check(
        CLI::Validator(
            [](std::string& v) {
              long long k = 0;
              const auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), k);
              if (ec != std::errc() || end != v.data() + v.size()) return std::string("level must be an integer");
              return k >= 1 ? std::string() : std::string("level must be at least 1");
            },
            "INT>=1"));
  };

  auto* wzw_cmd = app.add_subcommand("wzw", "Modular data of C(g,k)");
  add_spec(wzw_cmd);
  add_common(wzw_cmd);
  wzw_cmd->add_flag("--dims", config.dims, "Quantum dimensions");
  wzw_cmd->add_flag("--twists", config.twists, "Twists");
  wzw_cmd->add_flag("--fusion", config.fusion, "Fusion table");
  wzw_cmd->add_flag("--s", config.s_matrix, "S-matrix");

  auto* condense_cmd = app.add_subcommand("condense", "Local modules over the Z3 simple-current algebra");
  add_spec(condense_cmd);
  add_common(condense_cmd);
  condense_cmd->add_flag("--check", config.check, "Run ring, modularity and Verlinde checks");

  auto* verify_cmd = app.add_subcommand("verify-paper", "Compare every golden table with computed values");
  add_common(verify_cmd);
  verify_cmd->add_option("--data-dir", config.data_dir, "Directory of golden JSON files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ExitCode::usage);
  }
  config.command = app.get_subcommands().front()->get_name();
  return execute(config, out, err);
}

}  // namespace modcat::cli
