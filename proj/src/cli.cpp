#include "ppdiv/cli.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "ppdiv/io.hpp"

namespace ppdiv::cli {

namespace {

using io::Json;

enum class Format { Json, Csv, Text };

struct Outcome {
  Outcome() = default;
  Outcome(Json r, int c = kOk) : report(std::move(r)), code(c) {}

  Json report;
  int code = kOk;
  std::vector<std::vector<std::string>> table;  // csv rows, hilbert only
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

Integer parse_integer(const std::string& s) {
  const Rational q = parse_rational(s);
  if (!is_integer(q)) throw Error(Errc::InvalidInput, "expected an integer, got " + s);
  return boost::multiprecision::numerator(q);
}

ZVector parse_weight(const std::string& s) {
  ZVector u;
  for (const auto& part : split(s, ',')) u.push_back(parse_integer(part));
  return u;
}

std::vector<std::pair<Integer, Integer>> parse_box(const std::string& s) {
  std::vector<std::pair<Integer, Integer>> box;
  for (const auto& range : split(s, ',')) {
    const auto ends = split(range, ':');
    if (ends.size() != 2) throw Error(Errc::InvalidInput, "box ranges look like lo:hi, got " + range);
    box.emplace_back(parse_integer(ends[0]), parse_integer(ends[1]));
  }
  return box;
}

void flatten(const Json& j, const std::string& path, std::ostream& out) {
  if (j.is_object()) {
    if (j.empty()) out << path << ": {}\n";
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array()) {
    const bool scalars = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
    if (scalars) {
      out << path << ": [";
      for (std::size_t i = 0; i < j.size(); ++i)
        out << (i ? ", " : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      out << "]\n";
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

bool parse_class(Errc c) { return c == Errc::InvalidInput || c == Errc::DimensionMismatch; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polyhedral divisors and torus actions", "ppdiv"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));

  std::string input, second, weight, point, stratum, map_file, box;
  std::function<Outcome()> action;

  auto command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("input", input, "Input JSON file")->required();
    return sub;
  };
  auto divisor = [&] { return io::divisor_from_json(io::read_file(input)); };

  command("validate", "Check that a polyhedral divisor is proper")->callback([&] {
    action = [&] {
      const PolyhedralDivisor D = divisor();
      try {
        const PropernessReport rep = is_proper(D);
        return Outcome{io::to_json(rep), rep.proper ? kOk : kValidationFailure};
      } catch (const Error& e) {
        if (e.code() != Errc::IncompleteToricFan) throw;
        Json j;
        j["proper"] = nullptr;
        j["status"] = "unchecked";
        j["reason"] = e.what();
        return Outcome{j, kValidationFailure};
      }
    };
  });

  command("eval", "Evaluate at a weight")->callback([&] {
    action = [&] {
      Json j;
      j["divisor"] = io::to_json(evaluate(divisor(), to_rational(parse_weight(weight))));
      return Outcome{j};
    };
  });
  app.get_subcommand("eval")->add_option("-u", weight, "Weight a,b,...")->required();

  command("degree", "Polyhedral degree over P1")->callback([&] {
    action = [&] {
      Json j;
      j["degree"] = io::to_json(polyhedral_degree(divisor()));
      return Outcome{j};
    };
  });

  command("gitfan", "GIT quasifan")->callback([&] {
    action = [&] { return Outcome{io::to_json(git_quasifan(divisor()))}; };
  });

  auto point_command = [&](const char* name, const char* help, bool required) {
    CLI::App* sub = command(name, help);
    auto* opt = sub->add_option("--point", point, "Point label");
    if (required) opt->required();
    return sub;
  };

  point_command("fiber", "Fiber polyhedron and fiber lattices", false)->callback([&] {
    action = [&] {
      const PolyhedralDivisor D = divisor();
      Json j;
      if (!stratum.empty()) {
        std::vector<ZVector> rays;
        for (const auto& idx : split(stratum, ',')) {
          const Integer i = parse_integer(idx);
          if (i < 0 || i >= D.base().rays().size()) throw Error(Errc::UnknownRay, "ray index " + idx + " out of range");
          rays.push_back(D.base().rays()[i.convert_to<std::size_t>()]);
        }
        j["stratum"] = io::to_json(rays);
        j["fiber_polyhedron"] = io::to_json(fiber_polyhedron(D, rays));
        return Outcome{j};
      }
      if (point.empty()) throw Error(Errc::InvalidInput, "fiber needs --point or --stratum");
      const TailedPolyhedron delta = fiber_polyhedron(D, point);
      j["point"] = point;
      j["fiber_polyhedron"] = io::to_json(delta);
      j["normal_quasifan"] = io::to_json(normal_quasifan(delta));
      Json lat = Json::array();
      for (const auto& l : fiber_lattices(D, point)) lat.push_back(io::to_json(l));
      j["cone_lattices"] = std::move(lat);
      return Outcome{j};
    };
  });
  app.get_subcommand("fiber")->add_option("--stratum", stratum, "Ray indices i,j,... of a toric stratum");

  point_command("orbits", "Orbits in the fiber over a point", true)->callback([&] {
    action = [&] { return Outcome{io::to_json(fiber_orbits(divisor(), point))}; };
  });

  point_command("components", "Components of the fiber over a point", true)->callback([&] {
    action = [&] {
      Json j;
      j["point"] = point;
      Json cs = Json::array();
      for (const auto& c : fiber_components(divisor(), point)) cs.push_back(io::to_json(c));
      j["components"] = std::move(cs);
      return Outcome{j};
    };
  });

  point_command("reduced", "Whether the fiber over a point is reduced", true)->callback([&] {
    action = [&] {
      Json j;
      j["point"] = point;
      j["reduced"] = is_fiber_reduced(divisor(), point);
      return Outcome{j};
    };
  });

  command("downgrade", "Polyhedral divisor of a toric variety with subtorus action")->callback([&] {
    action = [&] { return Outcome{io::to_json(downgrade(io::downgrade_input_from_json(io::read_file(input))))}; };
  });

  command("restrict", "Pull a downgrade result back to a curve")->callback([&] {
    action = [&] {
      const Json j = io::read_file(input);
      const DowngradeResult r =
          j.contains("divisor") ? io::downgrade_result_from_json(j) : downgrade(io::downgrade_input_from_json(j));
      const io::RestrictionMap m = io::restriction_map_from_json(io::read_file(map_file));
      return Outcome{io::to_json(restrict_to_curve(r, m.pullbacks, m.target))};
    };
  });
  app.get_subcommand("restrict")->add_option("--map", map_file, "Restriction map JSON")->required();

  command("hilbert", "Dimensions of graded pieces over a box of weights")->callback([&] {
    action = [&] {
      const auto table = hilbert_table(divisor(), parse_box(box));
      Outcome o{io::to_json(table)};
      const std::size_t n = box.empty() ? 0 : split(box, ',').size();
      std::vector<std::string> header;
      for (std::size_t i = 0; i < n; ++i) header.push_back("u" + std::to_string(i + 1));
      header.push_back("dim");
      o.table.push_back(header);
      for (const auto& e : table) {
        std::vector<std::string> row;
        for (const auto& x : e.weight) row.push_back(to_string(x));
        row.push_back(to_string(e.dimension));
        o.table.push_back(std::move(row));
      }
      return o;
    };
  });
  app.get_subcommand("hilbert")->add_option("--box", box, "Ranges lo:hi,lo:hi,...")->required();

  CLI::App* equiv = command("equiv", "Linear equivalence over P1");
  equiv->add_option("other", second, "Second divisor")->required();
  equiv->callback([&] {
    action = [&] {
      const auto f = linear_equivalent_P1(divisor(), io::divisor_from_json(io::read_file(second)));
      Json j;
      j["equivalent"] = f.has_value();
      if (f) j["plurifunction"] = io::to_json(*f);
      return Outcome{j};
    };
  });

  command("classify", "Type of a K*-surface")->callback([&] {
    action = [&] {
      Json j;
      j["class"] = to_string(classify_k_star_surface(divisor()));
      return Outcome{j};
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  const Format fmt = format == "csv" ? Format::Csv : format == "text" ? Format::Text : Format::Json;
  if (fmt == Format::Csv && !app.got_subcommand("hilbert")) {
    err << "error: csv output is only available for hilbert\n";
    return kParseError;
  }

  Outcome result;
  try {
    result = action();
  } catch (const Error& e) {
    if (parse_class(e.code())) {
      err << "error: " << e.what() << "\n";
      return kParseError;
    }
    result.code = kValidationFailure;
    result.report = Json::object();
    result.report["error"] = errc_name(e.code());
    result.report["message"] = e.what();
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kParseError;
  }

  switch (fmt) {
    case Format::Json:
      out << result.report.dump(2) << "\n";
      break;
    case Format::Text:
      flatten(result.report, "", out);
      break;
    case Format::Csv:
      if (result.code != kOk) {
        out << result.report.dump(2) << "\n";
        break;
      }
      for (const auto& row : result.table) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << "\n";
      }
      break;
  }
  return result.code;
}

}  // namespace ppdiv::cli
