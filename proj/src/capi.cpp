#include "fibermin/fibermin.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "error.hpp"
#include "presets.hpp"

struct fm_poly {
  fm::GroupPoly v;
};
struct fm_matrix {
  fm::PolyMatrix v;
};
struct fm_penner {
  fm::PennerSpec v;
};
struct fm_cone {
  fm::ConeDesc v;
};
struct fm_segment {
  fm::Segment v;
};
struct fm_minpoint {
  fm::MinPoint v;
};
struct fm_certificate {
  fm::IrrationalityCertificate v;
};

namespace {

thread_local std::string g_last_error;

template <class F>
fm_status guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return FM_OK;
  } catch (const fm::Error& e) {
    g_last_error = e.what();
    return static_cast<fm_status>(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("malformed input: ") + e.what();
    return FM_PARSE;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return FM_LIMIT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FM_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw fm::Error(fm::ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class T, class V>
void emit(T** out, V&& value) {
  need(out, "output pointer");
  *out = new T{std::forward<V>(value)};
}

void emit_str(char** out, const std::string& s) {
  need(out, "output pointer");
  *out = dup(s);
}

fm::json parse(const char* text) {
  need(text, "input text");
  return fm::parse_json_text(text);
}

}  // namespace

extern "C" {

const char* fm_last_error(void) { return g_last_error.c_str(); }

const char* fm_status_name(fm_status s) {
  switch (s) {
    case FM_OK: return "ok";
    case FM_INVALID_ARGUMENT: return "invalid argument";
    case FM_PARSE: return "parse error";
    case FM_DIMENSION_MISMATCH: return "dimension mismatch";
    case FM_NOT_DIVISIBLE: return "not divisible";
    case FM_DOMAIN: return "domain error";
    case FM_NUMERIC: return "numeric failure";
    case FM_LIMIT: return "limit exceeded";
    case FM_DEGENERATE: return "degenerate input";
    case FM_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* fm_version(void) { return "0.1.0"; }

void fm_string_free(char* s) { std::free(s); }

fm_status fm_poly_parse_json(const char* text, fm_poly** out) {
  return guard([&] { emit(out, fm::poly_from_json(parse(text))); });
}

fm_status fm_poly_parse_expr(const char* expr, const char* const* vars, size_t nvars, fm_poly** out) {
  return guard([&] {
    need(expr, "expression");
    if (nvars) need(vars, "variable list");
    std::vector<std::string> v;
    for (size_t i = 0; i < nvars; ++i) {
      need(vars[i], "variable name");
      v.emplace_back(vars[i]);
    }
    emit(out, fm::parse_poly_expr(expr, v));
  });
}

fm_status fm_poly_to_json(const fm_poly* p, char** out) {
  return guard([&] {
    need(p, "polynomial");
    emit_str(out, fm::poly_to_json(p->v).dump());
  });
}

fm_status fm_poly_to_text(const fm_poly* p, char** out) {
  return guard([&] {
    need(p, "polynomial");
    emit_str(out, fm::to_string(p->v));
  });
}

#define FM_BINARY(name, fn)                                      \
  fm_status name(const fm_poly* a, const fm_poly* b, fm_poly** out) { \
    return guard([&] {                                           \
      need(a, "first operand");                                  \
      need(b, "second operand");                                 \
      emit(out, fn(a->v, b->v));                                 \
    });                                                          \
  }

FM_BINARY(fm_poly_add, fm::add)
FM_BINARY(fm_poly_sub, fm::sub)
FM_BINARY(fm_poly_mul, fm::mul)
FM_BINARY(fm_poly_exact_div, fm::exact_div)
#undef FM_BINARY

fm_status fm_poly_normalize_unit(const fm_poly* p, fm_poly** out) {
  return guard([&] {
    need(p, "polynomial");
    emit(out, fm::normalize_unit(p->v));
  });
}

fm_status fm_poly_substitute_inverse(const fm_poly* p, size_t var, fm_poly** out) {
  return guard([&] {
    need(p, "polynomial");
    emit(out, fm::substitute_inverse(p->v, var));
  });
}

fm_status fm_poly_reversal_symmetric(const fm_poly* p, int* out) {
  return guard([&] {
    need(p, "polynomial");
    need(out, "output pointer");
    *out = fm::reversal_symmetric(p->v) ? 1 : 0;
  });
}

fm_status fm_poly_equal(const fm_poly* a, const fm_poly* b, int* out) {
  return guard([&] {
    need(a, "first operand");
    need(b, "second operand");
    need(out, "output pointer");
    *out = a->v == b->v ? 1 : 0;
  });
}

void fm_poly_free(fm_poly* p) { delete p; }

fm_status fm_matrix_parse_json(const char* text, fm_matrix** out) {
  return guard([&] { emit(out, fm::matrix_from_json(parse(text))); });
}

fm_status fm_matrix_to_json(const fm_matrix* m, char** out) {
  return guard([&] {
    need(m, "matrix");
    emit_str(out, fm::matrix_to_json(m->v).dump());
  });
}

fm_status fm_matrix_char_det(const fm_matrix* m, const char* new_var, fm_poly** out) {
  return guard([&] {
    need(m, "matrix");
    emit(out, fm::char_det(m->v, new_var ? new_var : "u"));
  });
}

fm_status fm_teichmuller(const fm_matrix* pe, const fm_matrix* pv, const char* new_var, fm_poly** out) {
  return guard([&] {
    need(pe, "edge matrix");
    std::optional<fm::PolyMatrix> v;
    if (pv) v = pv->v;
    emit(out, fm::teichmuller_from_transition(pe->v, v, new_var ? new_var : "u"));
  });
}

void fm_matrix_free(fm_matrix* m) { delete m; }

fm_status fm_penner_parse_json(const char* text, fm_penner** out) {
  return guard([&] { emit(out, fm::penner_from_json(parse(text))); });
}

fm_status fm_penner_to_json(const fm_penner* s, char** out) {
  return guard([&] {
    need(s, "penner spec");
    emit_str(out, fm::penner_to_json(s->v).dump());
  });
}

fm_status fm_penner_phi(const fm_penner* s, fm_poly** out) {
  return guard([&] {
    need(s, "penner spec");
    emit(out, fm::phi(s->v));
  });
}

fm_status fm_penner_symmetric(const fm_penner* s, int* out) {
  return guard([&] {
    need(s, "penner spec");
    need(out, "output pointer");
    *out = fm::symmetry_check(s->v) ? 1 : 0;
  });
}

void fm_penner_free(fm_penner* s) { delete s; }

fm_status fm_cone_compute(const fm_poly* p, const char* ref_json, fm_cone** out) {
  return guard([&] {
    need(p, "polynomial");
    emit(out, fm::fibered_cone(p->v, fm::ratvec_from_json(parse(ref_json))));
  });
}

fm_status fm_cone_parse_json(const char* text, fm_cone** out) {
  return guard([&] { emit(out, fm::cone_from_json(parse(text))); });
}

fm_status fm_cone_to_json(const fm_cone* c, char** out) {
  return guard([&] {
    need(c, "cone");
    emit_str(out, fm::cone_to_json(c->v).dump());
  });
}

void fm_cone_free(fm_cone* c) { delete c; }

fm_status fm_teich_norm(const fm_poly* p, const char* class_json, char** out) {
  return guard([&] {
    need(p, "polynomial");
    emit_str(out, fm::to_string(fm::teich_norm(p->v, fm::ratvec_from_json(parse(class_json)))));
  });
}

fm_status fm_slice_covector(const char* x_json, const char* c_json, const char* mode, long d, char** out_json) {
  return guard([&] {
    fm::Covector x = fm::covector_from_json(parse(x_json));
    std::optional<fm::Covector> c;
    if (c_json) c = fm::covector_from_json(parse(c_json));
    std::string m = mode ? mode : "base";
    fm::SliceMode sm;
    if (m == "base") {
      sm = fm::SliceMode::Base;
    } else if (m == "drill") {
      sm = fm::SliceMode::Drill;
    } else if (m == "branch") {
      sm = fm::SliceMode::Branch;
    } else {
      throw fm::Error(fm::ErrorCode::InvalidArgument, "mode must be base, drill or branch");
    }
    fm::json j{{"covector", fm::slice_covector(x, c, sm, d)}};
    if (c) {
      j["content"] = fm::content(*c);
      j["meridians_are_boundary"] = fm::content(*c) == 1;
    }
    emit_str(out_json, j.dump());
  });
}

fm_status fm_segment_parse_json(const char* text, fm_segment** out) {
  return guard([&] { emit(out, fm::segment_from_json(parse(text))); });
}

fm_status fm_segment_from_covector(const fm_cone* c, const char* w_json, fm_segment** out) {
  return guard([&] {
    need(c, "cone");
    emit(out, fm::segment_from_covector(c->v, fm::covector_from_json(parse(w_json))));
  });
}

fm_status fm_segment_to_json(const fm_segment* s, char** out) {
  return guard([&] {
    need(s, "segment");
    emit_str(out, fm::segment_to_json(s->v).dump());
  });
}

void fm_segment_free(fm_segment* s) { delete s; }

fm_status fm_lambda(const fm_poly* p, const fm_cone* c, const char* class_json, int prec, char** out_json) {
  return guard([&] {
    need(p, "polynomial");
    need(c, "cone");
    fm::RatVec alpha = fm::ratvec_from_json(parse(class_json));
    fm::DilatationValue v = fm::eval_lambda(p->v, alpha, c->v, prec);
    fm::json j = fm::lambda_to_json(v, prec);
    j["teichmuller_norm"] = fm::to_string(fm::teich_norm(p->v, alpha));
    emit_str(out_json, j.dump());
  });
}

fm_status fm_minimize(const fm_poly* p, const fm_cone* c, const fm_segment* s, int prec, fm_minpoint** out) {
  return guard([&] {
    need(p, "polynomial");
    need(c, "cone");
    need(s, "segment");
    emit(out, fm::minimize_on_slice(p->v, c->v, s->v, prec));
  });
}

fm_status fm_minpoint_to_json(const fm_minpoint* m, char** out) {
  return guard([&] {
    need(m, "minimum");
    emit_str(out, fm::minpoint_to_json(m->v).dump());
  });
}

fm_status fm_minpoint_amodule(const fm_minpoint* m, const char* x_json, int certified, char** out_json) {
  return guard([&] {
    need(m, "minimum");
    std::optional<bool> cert;
    if (certified >= 0) cert = certified != 0;
    auto a = fm::a_module_presentation(m->v, fm::covector_from_json(parse(x_json)), cert);
    emit_str(out_json, fm::amodule_to_json(a, m->v.digits).dump());
  });
}

void fm_minpoint_free(fm_minpoint* m) { delete m; }

fm_status fm_certify(const fm_poly* p, const fm_minpoint* m, int prec, fm_certificate** out) {
  return guard([&] {
    need(p, "polynomial");
    need(m, "minimum");
    emit(out, fm::certify_minpoint(p->v, m->v, prec));
  });
}

fm_status fm_certificate_parse_json(const char* text, fm_certificate** out) {
  return guard([&] { emit(out, fm::certificate_from_json(parse(text))); });
}

fm_status fm_certificate_to_json(const fm_certificate* c, char** out) {
  return guard([&] {
    need(c, "certificate");
    emit_str(out, fm::certificate_to_json(c->v).dump());
  });
}

fm_status fm_certificate_verdict(const fm_certificate* c, int* irrational) {
  return guard([&] {
    need(c, "certificate");
    need(irrational, "output pointer");
    *irrational = c->v.verdict == fm::Verdict::Irrational ? 1 : 0;
  });
}

fm_status fm_certificate_recheck(const fm_certificate* c, int* ok, char** report_json) {
  return guard([&] {
    need(c, "certificate");
    need(ok, "output pointer");
    fm::RecheckResult r = fm::recheck(c->v);
    *ok = r.ok ? 1 : 0;
    if (report_json) *report_json = dup(fm::json{{"ok", r.ok}, {"failures", r.failures}}.dump());
  });
}

void fm_certificate_free(fm_certificate* c) { delete c; }

fm_status fm_census(const fm_matrix* m, long max_power, char** out_json) {
  return guard([&] {
    need(m, "matrix");
    emit_str(out_json, fm::census_to_json(fm::census(m->v, max_power)).dump());
  });
}

fm_status fm_drilling_representatives(const char* classes_json, const char* x_json, char** out_json) {
  return guard([&] {
    std::vector<fm::Covector> classes;
    for (const auto& c : parse(classes_json)) classes.push_back(fm::covector_from_json(c));
    fm::json reps = fm::drilling_class_representatives(classes, fm::covector_from_json(parse(x_json)));
    emit_str(out_json, reps.dump());
  });
}

fm_status fm_reproduce(const char* preset, int prec, char** report_json, int* passed) {
  return guard([&] {
    need(preset, "preset name");
    fm::ReproduceReport r = fm::reproduce(preset, prec);
    if (passed) *passed = r.passed ? 1 : 0;
    emit_str(report_json, r.report.dump());
  });
}

}  // extern "C"
