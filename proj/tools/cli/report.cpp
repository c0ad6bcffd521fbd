#include "cli/report.hpp"

#include <sstream>
#include <stdexcept>

namespace altdes::cli {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Finding: return "finding";
  }
  return "?";
}

Status parse_status(std::string_view s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "finding") return Status::Finding;
  throw std::invalid_argument("unknown status: " + std::string(s));
}

bool Report::all_pass() const {
  for (const auto& r : results) {
    if (r.status != Status::Pass) return false;
  }
  return true;
}

// JSON -----------------------------------------------------------------------

Json integer_to_json(const Integer& z) {
  if (mpz_fits_slong_p(z.get_mpz_t())) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

namespace {

Json value_to_json(const Value& v) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, IntPoly>) {
          Json arr = Json::array();
          for (const auto& c : x.coeffs()) arr.push_back(integer_to_json(c));
          return arr;
        } else if constexpr (std::is_same_v<T, BiPolyTQ>) {
          Json arr = Json::array();
          for (const auto& t : x.terms()) {
            arr.push_back(Json{{"t_exp", t.t_exp}, {"q_exp", t.q_exp}, {"coeff", integer_to_json(t.coeff)}});
          }
          return arr;
        } else {
          return integer_to_json(x);
        }
      },
      v);
}

std::string_view value_kind(const Value& v) {
  switch (v.index()) {
    case 0: return "polynomial";
    case 1: return "bivariate";
    default: return "integer";
  }
}

Value value_from_json(const std::string& kind, const Json& j) {
  if (kind == "polynomial") {
    std::vector<Integer> cs;
    for (const auto& c : j) cs.push_back(integer_from_json(c));
    return IntPoly(std::move(cs));
  }
  if (kind == "bivariate") {
    std::vector<BiPolyTQ::Term> terms;
    for (const auto& t : j) {
      terms.push_back({t.at("t_exp").get<std::size_t>(), t.at("q_exp").get<std::size_t>(), integer_from_json(t.at("coeff"))});
    }
    return BiPolyTQ::from_terms(terms);
  }
  if (kind == "integer") return integer_from_json(j);
  throw std::invalid_argument("unknown value kind: " + kind);
}

}  // namespace

Json to_json(const Report& r) {
  Json out;
  out["command"] = r.command;
  out["parameters"] = Json::object();
  for (const auto& [k, v] : r.parameters) out["parameters"][k] = v;
  out["results"] = Json::array();
  for (const auto& res : r.results) {
    Json e;
    e["name"] = res.name;
    e["status"] = status_name(res.status);
    if (res.witness) e["witness"] = *res.witness;
    if (res.value) {
      e["kind"] = value_kind(*res.value);
      if (!res.vars.empty()) e["vars"] = res.vars;
      e["value"] = value_to_json(*res.value);
    }
    out["results"].push_back(std::move(e));
  }
  out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

Report report_from_json(const Json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  for (const auto& [k, v] : j.at("parameters").items()) r.parameters[k] = v.get<std::string>();
  for (const auto& e : j.at("results")) {
    Result res;
    res.name = e.at("name").get<std::string>();
    res.status = parse_status(e.at("status").get<std::string>());
    if (e.contains("witness")) res.witness = e["witness"].get<std::string>();
    if (e.contains("value")) {
      res.value = value_from_json(e.at("kind").get<std::string>(), e["value"]);
      if (e.contains("vars")) res.vars = e["vars"].get<std::string>();
    }
    r.results.push_back(std::move(res));
  }
  r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  return r;
}

// Text and CSV -----------------------------------------------------------------

std::string value_to_string(const Value& v, const std::string& vars) {
  return std::visit(
      [&vars](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, IntPoly>) {
          return x.to_string(vars.empty() ? "t" : vars);
        } else if constexpr (std::is_same_v<T, BiPolyTQ>) {
          const auto comma = vars.find(',');
          if (comma == std::string::npos) return x.to_string();
          return x.to_string(vars.substr(0, comma), vars.substr(comma + 1));
        } else {
          return x.get_str();
        }
      },
      v);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void render_csv(std::ostream& os, const Report& r) {
  os << "name,status,exp,exp2,coeff,witness\n";
  for (const auto& res : r.results) {
    const std::string head = csv_field(res.name) + "," + std::string(status_name(res.status)) + ",";
    const std::string tail = "," + csv_field(res.witness.value_or("")) + "\n";
    if (!res.value) {
      os << head << ",," << tail;
      continue;
    }
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, IntPoly>) {
            if (x.is_zero()) os << head << ",,0" << tail;
            for (std::size_t e = 0; e < x.size(); ++e) {
              if (x[e] != 0) os << head << e << ",," << x[e].get_str() << tail;
            }
          } else if constexpr (std::is_same_v<T, BiPolyTQ>) {
            if (x.is_zero()) os << head << ",,0" << tail;
            for (const auto& t : x.terms()) os << head << t.t_exp << "," << t.q_exp << "," << t.coeff.get_str() << tail;
          } else {
            os << head << ",," << x.get_str() << tail;
          }
        },
        *res.value);
  }
}

void render_text(std::ostream& os, const Report& r) {
  if (r.results.size() == 1 && r.results[0].value && r.results[0].status == Status::Pass) {
    os << value_to_string(*r.results[0].value, r.results[0].vars) << "\n";
    return;
  }
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& res : r.results) {
    ++counts[static_cast<int>(res.status)];
    os << res.name;
    if (!(res.value && res.status == Status::Pass)) os << ": " << status_name(res.status);
    if (res.witness) os << " [" << *res.witness << "]";
    if (res.value) os << " = " << value_to_string(*res.value, res.vars);
    os << "\n";
  }
  if (r.command.starts_with("verify")) {
    os << "summary: " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2] << " finding\n";
  }
}

}  // namespace

std::string render(const Report& r, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::Json: os << to_json(r).dump(2) << "\n"; break;
    case Format::Csv: render_csv(os, r); break;
    case Format::Text: render_text(os, r); break;
  }
  return os.str();
}

}  // namespace altdes::cli
