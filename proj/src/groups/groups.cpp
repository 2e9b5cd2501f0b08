#include "orbisev/groups/groups.hpp"

#include <cctype>
#include <map>
#include <mutex>

#include "orbisev/error.hpp"
#include "orbisev/exactalg/factor.hpp"

namespace orbisev::groups {

using exactalg::NumberField;

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

std::string Mat2::to_string() const {
  return "[[" + a.to_string() + ", " + b.to_string() + "], [" + c.to_string() + ", " +
         d.to_string() + "]]";
}

BiPoly act(const BiPoly& p, const Mat2& m) {
  const BiPoly u = BiPoly::u(), v = BiPoly::v();
  return exactalg::substitute(p, BiPoly(m.a) * u + BiPoly(m.b) * v,
                              BiPoly(m.c) * u + BiPoly(m.d) * v);
}

namespace {

constexpr int kMaxCyclotomicDegree = 48;

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

// Root of unity of order n in Q(zeta_n) (rational for n <= 2).
struct RootOfUnity {
  FieldRef field;
  FieldElement zeta;
};

RootOfUnity root_of_unity(int n) {
  if (euler_phi(n) > kMaxCyclotomicDegree)
    throw Error(ErrorKind::UnsupportedField,
                "cyclotomic field of order " + std::to_string(n) + " is too large");
  if (n == 1) return {nullptr, FieldElement(1)};
  if (n == 2) return {nullptr, FieldElement(-1)};
  FieldRef k = NumberField::cyclotomic(n);
  return {k, FieldElement::generator(k)};
}

std::string key(const Mat2& m) {
  std::string s;
  for (const auto* x : {&m.a, &m.b, &m.c, &m.d}) {
    for (const auto& c : x->coefficients()) s += c.get_str() + ",";
    s += ";";
  }
  return s;
}

void enumerate(GroupData& g) {
  std::map<std::string, size_t> index;
  g.elements = {Mat2{}};
  index[key(g.elements[0])] = 0;
  for (size_t i = 0; i < g.elements.size(); ++i)
    for (const auto& gen : g.generators) {
      Mat2 m = g.elements[i] * gen;
      if (index.emplace(key(m), g.elements.size()).second) {
        g.elements.push_back(m);
        if (g.elements.size() > 100000) internal_error("group closure does not terminate");
      }
    }
  g.order = static_cast<int>(g.elements.size());

  std::vector<int> cls(g.elements.size(), -1);
  g.class_sizes.clear();
  for (size_t i = 0; i < g.elements.size(); ++i) {
    if (cls[i] >= 0) continue;
    const int id = static_cast<int>(g.class_sizes.size());
    int size = 0;
    for (const auto& h : g.elements) {
      size_t j = index.at(key(h * g.elements[i] * h.inverse_sl2()));
      if (cls[j] < 0) {
        cls[j] = id;
        ++size;
      }
    }
    g.class_sizes.push_back(size);
  }
  g.classes = static_cast<int>(g.class_sizes.size());
}

BiPoly poly(std::initializer_list<std::tuple<int, int, int>> terms) {
  BiPoly p;
  for (auto [c, a, b] : terms) p.add_term({a, b}, FieldElement(c));
  return p;
}

// Classical invariants in the coordinates of the generators below.
const BiPoly kOctahedronVertices = poly({{1, 5, 1}, {-1, 1, 5}});            // uv(u^4 - v^4)
const BiPoly kOctahedronFaces = poly({{1, 8, 0}, {14, 4, 4}, {1, 0, 8}});    // u^8 + 14u^4v^4 + v^8
const BiPoly kOctahedronEdges = poly({{1, 12, 0}, {-33, 8, 4}, {-33, 4, 8}, {1, 0, 12}});

void build_cyclic(GroupData& g, int n) {
  RootOfUnity r = root_of_unity(n);
  g.field = r.field;
  g.generators = {Mat2{r.zeta, FieldElement(0), FieldElement(0), r.zeta.inverse()}};
  if (n == 1)
    g.invariants = {BiPoly::u(), BiPoly::v()};
  else
    g.invariants = {BiPoly::u().pow(n), BiPoly::v().pow(n), BiPoly::u() * BiPoly::v()};
}

void build_dihedral(GroupData& g, int k) {
  const int m = k - 2;
  RootOfUnity r = root_of_unity(2 * m);
  g.field = r.field;
  g.generators = {Mat2{r.zeta, FieldElement(0), FieldElement(0), r.zeta.inverse()},
                  Mat2{FieldElement(0), FieldElement(1), FieldElement(-1), FieldElement(0)}};
  const BiPoly u = BiPoly::u(), v = BiPoly::v();
  g.invariants = {u.pow(2) * v.pow(2), u.pow(2 * m) + v.pow(2 * m),
                  u * v * (u.pow(2 * m) - v.pow(2 * m))};
}

// Binary tetrahedral group from the quaternion units i, j and (1+i+j+k)/2.
std::vector<Mat2> tetrahedral_generators(const FieldElement& i) {
  const FieldElement h = FieldElement(Rational(1, 2));
  return {Mat2{i, FieldElement(0), FieldElement(0), -i},
          Mat2{FieldElement(0), FieldElement(1), FieldElement(-1), FieldElement(0)},
          Mat2{h * (FieldElement(1) + i), h * (FieldElement(1) + i), h * (FieldElement(-1) + i),
               h * (FieldElement(1) - i)}};
}

void build_exceptional(GroupData& g, int index) {
  if (index == 6) {
    RootOfUnity r = root_of_unity(4);
    g.field = r.field;
    g.generators = tetrahedral_generators(r.zeta);
    g.invariants = {kOctahedronVertices, kOctahedronFaces, kOctahedronEdges};
  } else if (index == 7) {
    RootOfUnity r = root_of_unity(8);
    g.field = r.field;
    g.generators = tetrahedral_generators(r.zeta.pow(2));
    g.generators.push_back(Mat2{r.zeta, FieldElement(0), FieldElement(0), r.zeta.inverse()});
    g.invariants = {kOctahedronFaces, kOctahedronVertices.pow(2),
                    kOctahedronVertices * kOctahedronEdges};
  } else {
    // Klein's icosahedral generators over Q(zeta_5).
    RootOfUnity r = root_of_unity(5);
    g.field = r.field;
    const FieldElement e = r.zeta, e2 = e.pow(2), e3 = e.pow(3), e4 = e.pow(4);
    const FieldElement sqrt5 = e - e2 - e3 + e4;
    const FieldElement s = sqrt5.inverse();
    g.generators = {Mat2{e3, FieldElement(0), FieldElement(0), e2},
                    Mat2{-(e - e4) * s, (e2 - e3) * s, (e2 - e3) * s, (e - e4) * s}};
    g.invariants = {
        poly({{1, 11, 1}, {11, 6, 6}, {-1, 1, 11}}),
        poly({{-1, 20, 0}, {-1, 0, 20}, {228, 15, 5}, {-228, 5, 15}, {-494, 10, 10}}),
        poly({{1, 30, 0}, {1, 0, 30}, {522, 25, 5}, {-522, 5, 25}, {-10005, 20, 10},
              {-10005, 10, 20}})};
  }
}

std::string canonical_label(const std::string& text, char& type, int& index) {
  std::string s;
  for (char ch : text)
    if (ch != '_' && ch != '{' && ch != '}' && !std::isspace(static_cast<unsigned char>(ch)))
      s += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (s == "TRIVIAL") s = "A0";
  auto bad = [&] { return Error(ErrorKind::InvalidArgument, "unknown ADE label: " + text); };
  if (s.size() < 2 || (s[0] != 'A' && s[0] != 'D' && s[0] != 'E')) throw bad();
  for (size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
  if (s.size() > 6) throw bad();
  type = s[0];
  index = std::stoi(s.substr(1));
  if ((type == 'D' && index < 4) || (type == 'E' && (index < 6 || index > 8))) throw bad();
  return std::string(1, type) + std::to_string(index);
}

}  // namespace

GroupRef build_group(const std::string& text) {
  static std::mutex mu;
  static std::map<std::string, GroupRef> cache;
  char type;
  int index;
  const std::string label = canonical_label(text, type, index);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(label);
    if (it != cache.end()) return it->second;
  }
  auto g = std::make_shared<GroupData>();
  g->label = label;
  g->type = type;
  g->index = index;
  if (type == 'A')
    build_cyclic(*g, index + 1);
  else if (type == 'D')
    build_dihedral(*g, index);
  else
    build_exceptional(*g, index);
  for (const auto& m : g->generators)
    if (!m.det().is_one()) internal_error("generator of " + label + " has determinant != 1");
  enumerate(*g);
  for (const auto& p : g->invariants)
    if (!is_invariant(p, *g)) internal_error("stored invariant of " + label + " is not invariant");
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(label, std::move(g)).first->second;
}

bool is_invariant(const BiPoly& p_in, const GroupData& g) {
  FieldRef kp = exactalg::coefficient_field(p_in);
  auto common = exactalg::common_extension(kp, g.field);
  BiPoly p = exactalg::embed(p_in, common.field, common.image_a);
  for (const auto& m : g.generators) {
    Mat2 mm{exactalg::embed(m.a, common.field, common.image_b),
            exactalg::embed(m.b, common.field, common.image_b),
            exactalg::embed(m.c, common.field, common.image_b),
            exactalg::embed(m.d, common.field, common.image_b)};
    if (act(p, mm) != p) return false;
  }
  return true;
}

Integer conjecture_rhs(const GroupData& g) { return Integer(g.classes) * g.order - 1; }

Rational orbifold_correction(const std::vector<std::string>& labels) {
  Rational s(0);
  for (const auto& l : labels) {
    auto g = build_group(l);
    s += Rational(g->classes) - Rational(1, g->order);
  }
  return s;
}

SeveriLedger severi_ledger(const Integer& k2, const Integer& euler,
                           const std::vector<std::string>& labels) {
  SeveriLedger out;
  out.k2 = k2;
  out.euler = euler;
  Integer sum = k2 + euler;
  if (sum % 12 != 0)
    throw Error(ErrorKind::NonIntegralChi,
                "Noether: K^2 + e = " + sum.get_str() + " is not divisible by 12");
  out.chi = sum / 12;
  Rational drop(0);
  for (const auto& l : labels) {
    auto g = build_group(l);
    out.singularities.push_back(g->label);
    drop += Rational(1) - Rational(1, g->order);
  }
  out.correction = orbifold_correction(labels);
  out.e_orb = Rational(euler) - drop;
  out.kl_l2 = Rational(2 * k2 - euler) + out.correction;
  out.deficit = Rational(k2 - 4 * out.chi);
  out.target_holds = out.kl_l2 >= out.correction;
  return out;
}

std::vector<std::string> catalog() {
  std::vector<std::string> out;
  for (int i = 0; i <= 8; ++i) out.push_back("A" + std::to_string(i));
  for (int i = 4; i <= 8; ++i) out.push_back("D" + std::to_string(i));
  for (int i = 6; i <= 8; ++i) out.push_back("E" + std::to_string(i));
  return out;
}

}  // namespace orbisev::groups
