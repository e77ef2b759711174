// Command-line front end.  Talks to the library only through fibermin.h.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "fibermin/fibermin.h"

using json = nlohmann::json;

namespace {

struct Failure {
  fm_status status;
  std::string message;
};

void check(fm_status s) {
  if (s != FM_OK) throw Failure{s, fm_last_error()};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  fm_string_free(s);
  return out;
}

template <class T, void (*F)(T*)>
struct Deleter {
  void operator()(T* p) const { F(p); }
};
using Poly = std::unique_ptr<fm_poly, Deleter<fm_poly, fm_poly_free>>;
using Matrix = std::unique_ptr<fm_matrix, Deleter<fm_matrix, fm_matrix_free>>;
using Penner = std::unique_ptr<fm_penner, Deleter<fm_penner, fm_penner_free>>;
using Cone = std::unique_ptr<fm_cone, Deleter<fm_cone, fm_cone_free>>;
using Seg = std::unique_ptr<fm_segment, Deleter<fm_segment, fm_segment_free>>;
using MinPt = std::unique_ptr<fm_minpoint, Deleter<fm_minpoint, fm_minpoint_free>>;
using Cert = std::unique_ptr<fm_certificate, Deleter<fm_certificate, fm_certificate_free>>;

// A path, "-" for stdin, or inline JSON.
std::string read_input(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return arg;
  std::ostringstream os;
  if (arg == "-") {
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(arg);
  if (!in) throw Failure{FM_INVALID_ARGUMENT, "cannot read " + arg};
  os << in.rdbuf();
  return os.str();
}

// "1,0" or "[1, \"1/2\"]" -> JSON array text
std::string vec_arg(const std::string& s) {
  if (!s.empty() && s[0] == '[') return s;
  json a = json::array();
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    bool integral = item.find_first_not_of("-+0123456789") == std::string::npos;
    if (integral) {
      a.push_back(std::stol(item));
    } else {
      a.push_back(item);
    }
  }
  return a.dump();
}

Poly load_poly(const std::string& arg) {
  fm_poly* p = nullptr;
  check(fm_poly_parse_json(read_input(arg).c_str(), &p));
  return Poly(p);
}

Matrix load_matrix(const std::string& arg) {
  fm_matrix* m = nullptr;
  check(fm_matrix_parse_json(read_input(arg).c_str(), &m));
  return Matrix(m);
}

Cone make_cone(const fm_poly* p, const std::string& ref) {
  fm_cone* c = nullptr;
  check(fm_cone_compute(p, vec_arg(ref).c_str(), &c));
  return Cone(c);
}

Seg make_segment(const fm_cone* c, const std::string& slice_file, const std::string& w, const std::string& origin,
                 const std::string& dir) {
  fm_segment* s = nullptr;
  if (!slice_file.empty()) {
    check(fm_segment_parse_json(read_input(slice_file).c_str(), &s));
  } else if (!w.empty()) {
    check(fm_segment_from_covector(c, vec_arg(w).c_str(), &s));
  } else {
    throw Failure{FM_INVALID_ARGUMENT, "give --slice FILE or --w COVECTOR"};
  }
  Seg seg(s);
  if (!origin.empty() || !dir.empty()) {
    if (origin.empty() || dir.empty()) throw Failure{FM_INVALID_ARGUMENT, "--chart-origin and --chart-dir go together"};
    json j = json::parse(take([&] {
      char* out = nullptr;
      check(fm_segment_to_json(seg.get(), &out));
      return out;
    }()));
    j["chart"] = {{"origin", json::parse(vec_arg(origin))}, {"direction", json::parse(vec_arg(dir))}};
    check(fm_segment_parse_json(j.dump().c_str(), &s));
    seg.reset(s);
  }
  return seg;
}

void render_text(std::ostream& os, const json& j, int indent) {
  const std::string pad(static_cast<size_t>(indent), ' ');
  if (j.is_object()) {
    if (j.contains("expr") && j.contains("vars")) {
      os << j["expr"].get<std::string>() << "\n";
      return;
    }
    os << "\n";
    for (auto it = j.begin(); it != j.end(); ++it) {
      os << pad << it.key() << ":";
      if (it->is_object() && !(it->contains("expr") && it->contains("vars"))) {
        render_text(os, *it, indent + 2);
      } else if (it->is_array() && !it->empty() && (it->front().is_object())) {
        os << "\n";
        for (const auto& x : *it) {
          os << pad << "  -";
          render_text(os, x, indent + 4);
        }
      } else {
        os << " ";
        render_text(os, *it, indent + 2);
      }
    }
    return;
  }
  if (j.is_string()) {
    os << j.get<std::string>() << "\n";
  } else {
    os << j.dump() << "\n";
  }
}

struct Output {
  std::string file;
  std::string format = "json";

  void emit(const json& j) const {
    std::ostringstream os;
    if (format == "text") {
      if (j.is_object() && !(j.contains("expr") && j.contains("vars"))) {
        std::ostringstream body;
        render_text(body, j, 0);
        std::string s = body.str();
        os << (s.size() && s[0] == '\n' ? s.substr(1) : s);
      } else {
        render_text(os, j, 0);
      }
    } else {
      os << j.dump(2) << "\n";
    }
    raw(os.str());
  }

  void raw(const std::string& text) const {
    if (file.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(file);
      if (!out) throw Failure{FM_INVALID_ARGUMENT, "cannot write " + file};
      out << text;
    }
  }
};

json poly_json(const fm_poly* p) {
  char* s = nullptr;
  check(fm_poly_to_json(p, &s));
  return json::parse(take(s));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fibered-face dilatation minimizer and irrationality certifier"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  int prec = 50;
  app.add_option("--prec", prec, "working precision in decimal digits")->capture_default_str()->check(CLI::Range(10, 2000));
  app.add_option("--out", out.file, "write the result to FILE");
  app.add_option("--format", out.format, "json or text")->capture_default_str()->check(CLI::IsMember({"json", "text"}));

  std::string input, pv_file, var = "u", ref, cls, slice_file, w, origin, dir, x, c, mode = "base", preset = "all";
  long d = 0, max_power = 1;
  bool normalize = false, symmetric = false, recheck = false;

  auto* charpoly = app.add_subcommand("charpoly", "det(uI - M) of a transition matrix");
  charpoly->add_option("matrix", input, "matrix JSON")->required();
  charpoly->add_option("--var", var, "name of the new variable")->capture_default_str();

  auto* teich = app.add_subcommand("teich", "Teichmuller polynomial char_det(PE)/char_det(PV)");
  teich->add_option("pe", input, "edge transition matrix JSON")->required();
  teich->add_option("--pv", pv_file, "vertex transition matrix JSON");
  teich->add_option("--var", var, "name of the new variable")->capture_default_str();
  teich->add_flag("--normalize", normalize, "divide out the unit ambiguity");

  auto* penner = app.add_subcommand("penner-phi", "Phi of a Penner-type word");
  penner->add_option("spec", input, "Penner spec JSON")->required();
  penner->add_flag("--symmetry", symmetric, "also test Phi(u,t) = Phi(u,t^-1) up to a unit");

  auto* cone = app.add_subcommand("cone", "fibered cone of the dominant term at a reference class");
  cone->add_option("poly", input, "polynomial JSON")->required();
  cone->add_option("--ref", ref, "reference class, e.g. 1,0")->required();

  auto* norm = app.add_subcommand("norm", "exact Teichmuller norm of a class");
  norm->add_option("poly", input, "polynomial JSON")->required();
  norm->add_option("--class", cls, "class, e.g. 3,1/2")->required();

  auto* slice = app.add_subcommand("slice", "slice covector for the base, drilled or branched face");
  slice->add_option("--x", x, "dual class of the base face")->required();
  slice->add_option("--c", c, "closed orbit class");
  slice->add_option("--mode", mode, "base, drill or branch")->capture_default_str()->check(CLI::IsMember({"base", "drill", "branch"}));
  slice->add_option("--d", d, "branched cover degree");
  slice->add_option("--poly", input, "polynomial JSON; with --ref also prints the segment");
  slice->add_option("--ref", ref, "reference class");

  auto* lambda = app.add_subcommand("lambda", "dilatation at a class");
  lambda->add_option("poly", input, "polynomial JSON")->required();
  lambda->add_option("--ref", ref, "reference class inside the cone")->required();
  lambda->add_option("--class", cls, "class to evaluate")->required();

  auto add_slice_opts = [&](CLI::App* sub) {
    sub->add_option("poly", input, "polynomial JSON")->required();
    sub->add_option("--ref", ref, "reference class inside the cone")->required();
    sub->add_option("--slice", slice_file, "segment JSON");
    sub->add_option("--w", w, "slice covector (two-variable cones)");
    sub->add_option("--chart-origin", origin, "chart origin on the segment's line");
    sub->add_option("--chart-dir", dir, "chart direction");
  };
  auto* minimize = app.add_subcommand("minimize", "minimal point of lambda on a one-parameter slice");
  add_slice_opts(minimize);
  minimize->add_option("--x", x, "dual class for the A-module presentation");

  auto* certify = app.add_subcommand("certify", "irrationality certificate for the slice minimum");
  certify->add_option("poly", input, "polynomial JSON, or a certificate with --recheck");
  certify->add_option("--ref", ref, "reference class inside the cone");
  certify->add_option("--slice", slice_file, "segment JSON");
  certify->add_option("--w", w, "slice covector (two-variable cones)");
  certify->add_option("--chart-origin", origin, "chart origin on the segment's line");
  certify->add_option("--chart-dir", dir, "chart direction");
  certify->add_flag("--recheck", recheck, "re-verify a certificate file instead");

  auto* census = app.add_subcommand("census", "closed orbit classes from diagonal entries of M^m");
  census->add_option("matrix", input, "transition matrix JSON")->required();
  census->add_option("--max-power", max_power, "largest m")->capture_default_str();
  census->add_option("--x", x, "base dual class; also print drilling representatives");

  auto* reproduce = app.add_subcommand("reproduce", "rerun a worked example and compare with published values");
  reproduce->add_option("preset", preset, "example1, penner62, magic72 or all")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*charpoly) {
      Matrix m = load_matrix(input);
      fm_poly* p = nullptr;
      check(fm_matrix_char_det(m.get(), var.c_str(), &p));
      out.emit(poly_json(Poly(p).get()));
    } else if (*teich) {
      Matrix pe = load_matrix(input);
      Matrix pv;
      if (!pv_file.empty()) pv = load_matrix(pv_file);
      fm_poly* p = nullptr;
      check(fm_teichmuller(pe.get(), pv.get(), var.c_str(), &p));
      Poly theta(p);
      if (normalize) {
        check(fm_poly_normalize_unit(theta.get(), &p));
        theta.reset(p);
      }
      out.emit(poly_json(theta.get()));
    } else if (*penner) {
      fm_penner* s = nullptr;
      check(fm_penner_parse_json(read_input(input).c_str(), &s));
      Penner spec(s);
      fm_poly* p = nullptr;
      check(fm_penner_phi(spec.get(), &p));
      Poly phi(p);
      json j = poly_json(phi.get());
      if (symmetric) {
        int sym = 0;
        check(fm_penner_symmetric(spec.get(), &sym));
        j = json{{"phi", j}, {"symmetric", sym != 0}};
      }
      out.emit(j);
    } else if (*cone) {
      Poly p = load_poly(input);
      Cone cn = make_cone(p.get(), ref);
      char* s = nullptr;
      check(fm_cone_to_json(cn.get(), &s));
      out.emit(json::parse(take(s)));
    } else if (*norm) {
      Poly p = load_poly(input);
      char* s = nullptr;
      check(fm_teich_norm(p.get(), vec_arg(cls).c_str(), &s));
      out.emit(json{{"norm", take(s)}});
    } else if (*slice) {
      char* s = nullptr;
      std::string cj = c.empty() ? "" : vec_arg(c);
      check(fm_slice_covector(vec_arg(x).c_str(), c.empty() ? nullptr : cj.c_str(), mode.c_str(), d, &s));
      json j = json::parse(take(s));
      if (!input.empty() && !ref.empty()) {
        Poly p = load_poly(input);
        Cone cn = make_cone(p.get(), ref);
        Seg seg = make_segment(cn.get(), "", j["covector"].dump(), "", "");
        check(fm_segment_to_json(seg.get(), &s));
        j["segment"] = json::parse(take(s));
      }
      out.emit(j);
    } else if (*lambda) {
      Poly p = load_poly(input);
      Cone cn = make_cone(p.get(), ref);
      char* s = nullptr;
      check(fm_lambda(p.get(), cn.get(), vec_arg(cls).c_str(), prec, &s));
      out.emit(json::parse(take(s)));
    } else if (*minimize) {
      Poly p = load_poly(input);
      Cone cn = make_cone(p.get(), ref);
      Seg seg = make_segment(cn.get(), slice_file, w, origin, dir);
      fm_minpoint* m = nullptr;
      check(fm_minimize(p.get(), cn.get(), seg.get(), prec, &m));
      MinPt mp(m);
      char* s = nullptr;
      check(fm_minpoint_to_json(mp.get(), &s));
      json j = json::parse(take(s));
      if (!x.empty()) {
        check(fm_minpoint_amodule(mp.get(), vec_arg(x).c_str(), -1, &s));
        j["a_module"] = json::parse(take(s));
      }
      out.emit(j);
    } else if (*certify) {
      if (input.empty()) throw Failure{FM_INVALID_ARGUMENT, "certify needs an input file"};
      if (recheck) {
        fm_certificate* ct = nullptr;
        check(fm_certificate_parse_json(read_input(input).c_str(), &ct));
        Cert cert(ct);
        int ok = 0;
        char* s = nullptr;
        check(fm_certificate_recheck(cert.get(), &ok, &s));
        out.emit(json::parse(take(s)));
        return ok ? 0 : 1;
      }
      if (ref.empty()) throw Failure{FM_INVALID_ARGUMENT, "certify needs --ref"};
      Poly p = load_poly(input);
      Cone cn = make_cone(p.get(), ref);
      Seg seg = make_segment(cn.get(), slice_file, w, origin, dir);
      fm_minpoint* m = nullptr;
      check(fm_minimize(p.get(), cn.get(), seg.get(), prec, &m));
      MinPt mp(m);
      fm_certificate* ct = nullptr;
      check(fm_certify(p.get(), mp.get(), prec, &ct));
      Cert cert(ct);
      char* s = nullptr;
      check(fm_certificate_to_json(cert.get(), &s));
      out.emit(json::parse(take(s)));
    } else if (*census) {
      Matrix m = load_matrix(input);
      char* s = nullptr;
      check(fm_census(m.get(), max_power, &s));
      json classes = json::parse(take(s));
      json j{{"classes", classes}};
      if (!x.empty()) {
        json hom = json::array();
        for (const auto& cl : classes) {
          json h = json::array({cl["m"]});
          for (const auto& t : cl["t_class"]) h.push_back(t);
          hom.push_back(h);
        }
        check(fm_drilling_representatives(hom.dump().c_str(), vec_arg(x).c_str(), &s));
        j["drilling_representatives"] = json::parse(take(s));
      }
      out.emit(j);
    } else if (*reproduce) {
      std::vector<std::string> names;
      if (preset == "all") {
        names = {"example1", "penner62", "magic72"};
      } else {
        names = {preset};
      }
      json reports = json::array();
      std::ostringstream text;
      bool all = true;
      for (const auto& n : names) {
        char* s = nullptr;
        int passed = 0;
        check(fm_reproduce(n.c_str(), prec, &s, &passed));
        json r = json::parse(take(s));
        if (out.format == "text") {
          text << n << ": " << (passed ? "PASS" : "FAIL") << "\n";
          for (const auto& ck : r["checks"]) {
            text << "  [" << (ck["pass"].get<bool>() ? "ok" : "FAIL") << "] " << ck["name"].get<std::string>()
                      << " = " << (ck["value"].is_string() ? ck["value"].get<std::string>() : ck["value"].dump())
                      << "\n";
          }
        }
        all = all && passed;
        reports.push_back(r);
      }
      if (out.format == "text") {
        out.raw(text.str());
      } else {
        out.emit(names.size() == 1 ? reports[0] : reports);
      }
      return all ? 0 : 1;
    }
  } catch (const Failure& f) {
    std::cerr << "error (" << fm_status_name(f.status) << "): " << f.message << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
