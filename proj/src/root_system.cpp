#include "root_system.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rootcones {

namespace {

Vec unit(std::size_t dim, std::size_t i, long c = 1) {
  Vec v = zero_vec(dim);
  v[i] = c;
  return v;
}

std::vector<Vec> simple_roots_for(char type, int rank, std::size_t dim) {
  std::vector<Vec> simples;
  switch (type) {
    case 'A':
      for (int i = 0; i < rank; ++i) {
        Vec v = zero_vec(dim);
        v[i] = 1;
        v[i + 1] = -1;
        simples.push_back(v);
      }
      break;
    case 'B':
      for (int i = 0; i + 1 < rank; ++i) {
        Vec v = zero_vec(dim);
        v[i] = 1;
        v[i + 1] = -1;
        simples.push_back(v);
      }
      simples.push_back(unit(dim, rank - 1));
      break;
    case 'C':
      for (int i = 0; i + 1 < rank; ++i) {
        Vec v = zero_vec(dim);
        v[i] = 1;
        v[i + 1] = -1;
        simples.push_back(v);
      }
      simples.push_back(unit(dim, rank - 1, 2));
      break;
    case 'D':
      for (int i = 0; i + 1 < rank; ++i) {
        Vec v = zero_vec(dim);
        v[i] = 1;
        v[i + 1] = -1;
        simples.push_back(v);
      }
      {
        Vec v = zero_vec(dim);
        v[rank - 2] = 1;
        v[rank - 1] = 1;
        simples.push_back(v);
      }
      break;
    case 'G': {
      // Short alpha_1 = (1,-1,0), long alpha_2 = (-1,2,-1); <a1,a2^vee> = -1,
      // <a2,a1^vee> = -3.
      simples.push_back(Vec{Rat(1), Rat(-1), Rat(0)});
      simples.push_back(Vec{Rat(-1), Rat(2), Rat(-1)});
      break;
    }
    default:
      throw std::invalid_argument("unknown type");
  }
  return simples;
}

}  // namespace

RootSystem RootSystem::build(char type, int rank) {
  bool ok = false;
  switch (type) {
    case 'A': ok = rank >= 1 && rank <= 8; break;
    case 'B': ok = rank >= 2 && rank <= 8; break;
    case 'C': ok = rank >= 2 && rank <= 8; break;
    case 'D': ok = rank >= 3 && rank <= 8; break;
    case 'G': ok = rank == 2; break;
    default: ok = false;
  }
  if (!ok) {
    std::ostringstream os;
    os << "invalid root system type/rank: " << type << rank;
    throw std::invalid_argument(os.str());
  }

  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.dim_ = (type == 'A') ? rank + 1 : (type == 'G' ? 3 : rank);
  rs.label_ = std::string(1, type) + std::to_string(rank);

  std::vector<Vec> simples = simple_roots_for(type, rank, rs.dim_);

  // Close the simple roots under simple reflections to get every root.
  auto reflect_by = [&](const Vec& alpha, const Vec& v) {
    Rat c = Rat(2) * dot(alpha, v) / dot(alpha, alpha);
    return sub(v, scale(c, alpha));
  };
  std::set<Vec> all(simples.begin(), simples.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vec> snapshot(all.begin(), all.end());
    for (const auto& beta : snapshot) {
      for (const auto& alpha : simples) {
        Vec img = reflect_by(alpha, beta);
        if (all.insert(img).second) grew = true;
      }
    }
  }

  // Positivity with respect to the simple basis: expand in simple-root
  // coordinates and read the sign (all coefficients share it).
  Mat basis_rows(simples.begin(), simples.end());
  std::vector<Vec> positives, negatives;
  for (const auto& beta : all) {
    Vec coeffs = coordinates_in_basis(simples, beta);
    int s = 0;
    for (const auto& c : coeffs) {
      if (sgn(c) > 0) s = 1;
      if (sgn(c) < 0) { s = -1; break; }
    }
    if (s > 0) positives.push_back(beta);
  }

  // Order: simple roots first (Dynkin order), the rest by height then lex.
  std::vector<Vec> ordered = simples;
  std::vector<std::pair<Rat, Vec>> rest;
  for (const auto& beta : positives) {
    if (std::find(simples.begin(), simples.end(), beta) != simples.end()) continue;
    Vec coeffs = coordinates_in_basis(simples, beta);
    Rat height(0);
    for (const auto& c : coeffs) height += c;
    rest.emplace_back(height, beta);
  }
  std::sort(rest.begin(), rest.end());
  for (auto& [h, beta] : rest) ordered.push_back(beta);

  rs.n_positive_ = ordered.size();
  rs.roots_ = ordered;
  for (const auto& beta : ordered) rs.roots_.push_back(scale(Rat(-1), beta));

  rs.finish_build();
  return rs;
}

RootSystem RootSystem::build(const std::string& label) {
  if (label.size() < 2) throw std::invalid_argument("bad root system label: " + label);
  char type = label[0];
  int rank = 0;
  try {
    rank = std::stoi(label.substr(1));
  } catch (...) {
    throw std::invalid_argument("bad root system label: " + label);
  }
  return build(type, rank);
}

void RootSystem::finish_build() {
  for (std::size_t i = 0; i < roots_.size(); ++i) root_lookup_[roots_[i]] = static_cast<int>(i);

  std::vector<Vec> simple_list(roots_.begin(), roots_.begin() + rank_);
  for (const auto& beta : roots_)
    simple_coords_.push_back(coordinates_in_basis(simple_list, beta));

  for (const auto& beta : roots_)
    coroots_.push_back(scale(Rat(2) / dot(beta, beta), beta));

  cartan_.assign(rank_, std::vector<long>(rank_, 0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      Rat c = dot(roots_[i], coroots_[j]);
      if (c.get_den() != 1) throw std::logic_error("non-integral Cartan pairing");
      cartan_[i][j] = static_cast<long>(c.get_num().get_si());
    }

  // Fundamental weights: solve <w_i, alpha_j^vee> = delta_ij inside the root
  // span. Write w_i = sum_k c_k alpha_k and solve the Cartan system.
  {
    Mat cartan_rat = zero_mat(rank_, rank_);
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) cartan_rat[j][i] = Rat(cartan_[i][j]);
    // column vector e_i: coefficients of w_i in simple roots solve C^T c = e_i
    for (int i = 0; i < rank_; ++i) {
      Vec e = zero_vec(rank_);
      e[i] = 1;
      Vec c = solve(cartan_rat, e);
      Vec w = zero_vec(dim_);
      for (int k = 0; k < rank_; ++k) w = add(w, scale(c[k], roots_[k]));
      fund_weights_.push_back(w);
    }
  }

  simple_perm_.assign(rank_, std::vector<int>(roots_.size(), -1));
  for (int i = 0; i < rank_; ++i) {
    for (std::size_t r = 0; r < roots_.size(); ++r) {
      Vec img = reflect(i, roots_[r]);
      auto it = root_lookup_.find(img);
      if (it == root_lookup_.end()) throw std::logic_error("root set not reflection-closed");
      simple_perm_[i][r] = it->second;
    }
  }

  span_projector_ = projector_onto_span(simple_list, dim_);
}

int RootSystem::negate_root(int idx) const {
  int m = static_cast<int>(n_positive_);
  return idx < m ? idx + m : idx - m;
}

int RootSystem::root_index(const Vec& v) const {
  auto it = root_lookup_.find(v);
  return it == root_lookup_.end() ? -1 : it->second;
}

Vec RootSystem::reflect(int i, const Vec& v) const {
  Rat c = dot(roots_[i], v) * Rat(2) / dot(roots_[i], roots_[i]);
  return sub(v, scale(c, roots_[i]));
}

Vec RootSystem::project_to_root_span(const Vec& v) const {
  return mat_apply(span_projector_, v);
}

bool RootSystem::in_root_span(const Vec& v) const {
  return project_to_root_span(v) == v;
}

Rat RootSystem::d_min(const Vec& x) const {
  Rat best = dot(roots_[0], x);
  for (int i = 1; i < rank_; ++i) best = std::min(best, dot(roots_[i], x));
  return best;
}

Rat RootSystem::pair(const Vec& a, const Vec& b) const {
  if (a.size() != dim_ || b.size() != dim_)
    throw std::invalid_argument("pair: dimension mismatch");
  return dot(a, b);
}

std::string RootSystem::realization_note() const {
  std::ostringstream os;
  os << label_ << ": ";
  switch (type_) {
    case 'A':
      os << "sum-zero hyperplane of Q^" << dim_ << ", roots e_i - e_j, <a,a> = 2";
      break;
    case 'B':
      os << "Q^" << dim_ << ", long roots <a,a> = 2, short <a,a> = 1";
      break;
    case 'C':
      os << "Q^" << dim_ << ", long roots <a,a> = 4, short <a,a> = 2";
      break;
    case 'D':
      os << "Q^" << dim_ << ", all roots <a,a> = 2";
      break;
    case 'G':
      os << "sum-zero plane of Q^3, short <a,a> = 2, long <a,a> = 6";
      break;
  }
  os << "; invariant form = standard dot product";
  return os.str();
}

}  // namespace rootcones
