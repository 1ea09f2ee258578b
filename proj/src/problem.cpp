#include "qgeom/problem.hpp"

#include <fstream>

namespace qgeom {
namespace {

Complex parse_complex(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw Error(ErrorKind::Parse, where + ": expected [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

CVector parse_vector(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, where + ": expected array");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) {
    v(static_cast<Eigen::Index>(k)) = parse_complex(j[k], where);
  }
  return v;
}

CMatrix parse_matrix(const nlohmann::json& j, int dim,
                     const std::string& where) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, where + ": expected rows");
  if (static_cast<int>(j.size()) != dim) {
    throw Error(ErrorKind::DimensionMismatch,
                where + ": has " + std::to_string(j.size()) + " rows, dim is " +
                    std::to_string(dim));
  }
  CMatrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const CVector row = parse_vector(j[r], where);
    if (row.size() != dim) {
      throw Error(ErrorKind::DimensionMismatch,
                  where + ": row " + std::to_string(r) + " has " +
                      std::to_string(row.size()) + " entries, dim is " +
                      std::to_string(dim));
    }
    m.row(r) = row.transpose();
  }
  return m;
}

template <typename T>
T get_or(const nlohmann::json& obj, const char* key, T fallback) {
  const auto it = obj.find(key);
  return it == obj.end() ? fallback : it->get<T>();
}

}  // namespace

const Observable& ProblemFile::observable(const std::string& name) const {
  for (const auto& [key, obs] : observables) {
    if (key == name) return obs;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown observable '" + name + "'");
}

const State& ProblemFile::require_state() const {
  if (!state) throw Error(ErrorKind::InvalidArgument, "problem has no state");
  return *state;
}

ProblemFile parse_problem(const nlohmann::json& j,
                          std::optional<double> tol_override) {
  try {
    if (!j.is_object()) throw Error(ErrorKind::Parse, "problem must be an object");
    ProblemFile p;
    if (j.contains("options")) {
      const auto& o = j.at("options");
      p.options.tol = get_or(o, "tol", p.options.tol);
      p.options.metric_scale = get_or(o, "metric_scale", p.options.metric_scale);
      p.options.seed = get_or(o, "seed", p.options.seed);
    }
    if (tol_override) p.options.tol = *tol_override;

    if (j.contains("grid")) {
      const auto& g = j.at("grid");
      p.grid.emplace(g.at("n").get<int>(), g.at("length").get<double>(),
                     get_or(g, "hbar", 1.0));
    }
    p.dim = j.contains("dim") ? j.at("dim").get<int>()
                              : (p.grid ? p.grid->n() : 0);
    if (p.grid && p.grid->n() != p.dim) {
      throw Error(ErrorKind::DimensionMismatch,
                  "grid.n (" + std::to_string(p.grid->n()) +
                      ") differs from dim (" + std::to_string(p.dim) + ")");
    }
    if (p.dim < 2) {
      throw Error(ErrorKind::DimensionTooSmall, "dim must be at least 2");
    }

    if (j.contains("observables")) {
      for (const auto& [name, mat] : j.at("observables").items()) {
        const std::string where = "observable '" + name + "'";
        try {
          p.observables.emplace_back(
              name, Observable::from_matrix(parse_matrix(mat, p.dim, where)));
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NotHermitian) throw;
          throw Error(ErrorKind::NotHermitian, where + ": " + e.what());
        }
      }
    }
    if (p.grid) {
      const auto defined = [&](const char* name) {
        for (const auto& kv : p.observables)
          if (kv.first == name) return true;
        return false;
      };
      if (!defined("x")) p.observables.emplace_back("x", position_op(*p.grid));
      if (!defined("p")) p.observables.emplace_back("p", momentum_op(*p.grid));
    }

    if (j.contains("state")) {
      const CVector v = parse_vector(j.at("state"), "state");
      require_same_dim(v.size(), p.dim, "state");
      p.state = validate_state(v, p.options.tol);
    } else if (p.grid && j.at("grid").contains("gaussian")) {
      const auto& gs = j.at("grid").at("gaussian");
      p.state = gaussian(*p.grid, get_or(gs, "x0", 0.0), get_or(gs, "p0", 0.0),
                         gs.at("sigma").get<double>());
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("problem file: ") + e.what());
  }
}

ProblemFile load_problem(const std::filesystem::path& path,
                         std::optional<double> tol_override) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::Io, "cannot open problem file " + path.string());
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse,
                "cannot parse " + path.string() + ": " + e.what());
  }
  return parse_problem(j, tol_override);
}

}  // namespace qgeom
