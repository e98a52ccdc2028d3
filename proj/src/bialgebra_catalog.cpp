#include "bicross/bialgebra_catalog.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace bicross {

namespace {

using Labels = std::vector<std::string>;

const Labels kPrimal = {"X", "Y", "~A"};
const Labels kDual = {"~X", "~Y", "A"};
const Labels kHXY = {"H", "X", "Y"};

LieBialgebra make(const Labels& labels, const std::vector<BracketRule>& br, const std::vector<CobracketRule>& cr,
                  const Params& p) {
  return LieBialgebra::from_rules(LieAlgebra::from_brackets(labels, br), cr, p);
}

NPlus1Data make_data(const std::vector<std::string>& labels, const std::vector<BracketRule>& rules,
                     const std::vector<Term>& chi, const std::vector<std::vector<Term>>& beta_images) {
  NPlus1Data d;
  d.g1 = LieAlgebra::from_brackets(labels, rules);
  d.chi = d.g1.vector(chi);
  std::vector<Vector> cols;
  for (const auto& img : beta_images) cols.push_back(d.g1.vector(img));
  d.beta = Matrix::from_columns(labels.size(), cols);
  return d;
}

Scalar exact(double v) { return Scalar(v); }

const std::map<std::string, std::set<std::string>>& key_table() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"bialg/1+1", {}},
      {"bialg/4.1", {"b", "d", "lambda"}},
      {"bialg/4.1*", {"b", "d", "lambda"}},
      {"bialg/4.2", {"d", "lambda"}},
      {"bialg/4.2*", {"d", "lambda"}},
      {"bialg/4.3+", {"lambda"}},
      {"bialg/4.3+*", {"lambda"}},
      {"bialg/4.3=0", {"lambda"}},
      {"bialg/4.3=0*", {"lambda"}},
      {"bialg/4.3-", {"lambda"}},
      {"bialg/4.3-*", {"lambda"}},
      {"bialg/2dim", {"q"}},
      {"bialg/Uq-su2", {"kappa", "logq"}},
      {"bialg/Uq-su11", {"kappa", "logq"}},
      {"bialg/Uq-sl2R", {"r", "rs"}},
      {"bialg/SUq-2", {"logq", "qinv"}},
      {"bialg/SLq-2R", {"r"}},
      {"bialg/SUq-11", {"logq", "qinv"}},
      {"bialg/Umu-e2", {"m"}},
      {"bialg/Emu-2", {"m"}},
      {"bialg/selfdual-1", {"mi", "mr", "s"}},
      {"bialg/selfdual-2", {"alpha", "beta"}},
      {"bialg/isolated", {}},
  };
  return keys;
}

Params with_lambda(Params p, const Scalar& l) {
  p["lambda"] = l;
  return p;
}

std::vector<Params> lambda_samples(Params base) {
  return {with_lambda(base, 1), with_lambda(base, -2), with_lambda(base, ratio(3, 7)), with_lambda(base, 0)};
}

}  // namespace

const std::vector<std::string>& bialgebra_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : key_table()) out.push_back(k);
    return out;
  }();
  return names;
}

std::set<std::string> bialgebra_parameter_keys(const std::string& base) {
  auto it = key_table().find(base);
  if (it == key_table().end()) throw std::invalid_argument("unknown bialgebra entry: " + base);
  return it->second;
}

std::vector<Params> bialgebra_samples(const std::string& base) {
  bialgebra_parameter_keys(base);
  std::string b = base.back() == '*' ? base.substr(0, base.size() - 1) : base;
  if (b == "bialg/1+1" || b == "bialg/isolated") return {{}, {}, {}};
  if (b == "bialg/4.1") {
    std::vector<Params> out;
    for (auto [d, bb] : std::vector<std::pair<Scalar, Scalar>>{{-1, 0}, {1, 1}, {ratio(2, 3), 0}, {1, -3}})
      for (auto& p : lambda_samples({{"d", d}, {"b", bb}})) out.push_back(p);
    return out;
  }
  if (b == "bialg/4.2") {
    std::vector<Params> out;
    for (Scalar d : {Scalar(-1), Scalar(2), ratio(-5, 4)})
      for (auto& p : lambda_samples({{"d", d}})) out.push_back(p);
    return out;
  }
  if (b == "bialg/4.3+" || b == "bialg/4.3=0" || b == "bialg/4.3-") {
    auto out = lambda_samples({});
    out.push_back(with_lambda({}, exact(4 / M_PI)));
    return out;
  }
  if (b == "bialg/2dim") return {{{"q", 1}}, {{"q", -3}}, {{"q", ratio(5, 2)}}, {{"q", 0}}};
  if (b == "bialg/Uq-su2" || b == "bialg/Uq-su11") {
    double q = 2.0, l = std::log(q);
    return {{{"logq", 1}, {"kappa", 3}},
            {{"logq", ratio(-2, 3)}, {"kappa", ratio(1, 7)}},
            {{"logq", ratio(5, 2)}, {"kappa", -4}},
            {{"logq", exact(l)}, {"kappa", exact(8 * l / (q - 1 / q))}}};
  }
  if (b == "bialg/Uq-sl2R") {
    double r = 0.7;
    return {{{"r", 1}, {"rs", 2}},
            {{"r", ratio(-1, 3)}, {"rs", 5}},
            {{"r", ratio(7, 2)}, {"rs", ratio(-2, 9)}},
            {{"r", exact(r)}, {"rs", exact(r / std::sin(r))}}};
  }
  if (b == "bialg/SUq-2" || b == "bialg/SUq-11") {
    double q = 3.0;
    return {{{"logq", 1}, {"qinv", 2}},
            {{"logq", ratio(-3, 5)}, {"qinv", ratio(1, 4)}},
            {{"logq", 4}, {"qinv", -1}},
            {{"logq", exact(std::log(q))}, {"qinv", exact(1 / q)}}};
  }
  if (b == "bialg/SLq-2R") return {{{"r", 1}}, {{"r", ratio(-2, 5)}}, {{"r", 3}}, {{"r", exact(0.9)}}};
  if (b == "bialg/Umu-e2" || b == "bialg/Emu-2")
    return {{{"m", 1}}, {{"m", ratio(-7, 3)}}, {{"m", ratio(1, 2)}}, {{"m", exact(std::log(1.5))}}};
  if (b == "bialg/selfdual-1") {
    double rho = 2.0, mr = 0.3, mi = -1.1;
    return {{{"mr", 1}, {"mi", 2}, {"s", 3}},
            {{"mr", ratio(-1, 2)}, {"mi", ratio(1, 3)}, {"s", -1}},
            {{"mr", 0}, {"mi", 5}, {"s", ratio(2, 7)}},
            {{"mr", exact(mr)}, {"mi", exact(mi)}, {"s", exact(-std::log(rho) / (mr * mr + mi * mi))}}};
  }
  if (b == "bialg/selfdual-2")
    return {{{"alpha", 2}, {"beta", 1}},
            {{"alpha", ratio(-1, 3)}, {"beta", ratio(5, 2)}},
            {{"alpha", 4}, {"beta", -3}},
            {{"alpha", 0}, {"beta", 7}}};
  throw std::invalid_argument("unknown bialgebra entry: " + base);
}

BialgebraEntry make_bialgebra_entry(const std::string& base, const Params& given) {
  std::set<std::string> keys = bialgebra_parameter_keys(base);
  for (const auto& [k, v] : given)
    if (!keys.count(k)) throw std::invalid_argument("unknown parameter '" + k + "' for " + base);
  Params p = bialgebra_samples(base).front();
  for (const auto& [k, v] : given) p[k] = v;
  auto get = [&](const char* k) { return p.at(k); };

  BialgebraEntry e;
  e.name = base;
  e.params = p;
  bool starred = base.back() == '*';
  std::string stem = starred ? base.substr(0, base.size() - 1) : base;
  if (stem.rfind("bialg/4.", 0) == 0) e.partner = format_entry_name(starred ? stem : stem + "*", p);

  if (base == "bialg/1+1") {
    e.summary = "[~A,X]=~A, delta(X)=~A^X; self-dual";
    e.bialgebra = make({"X", "~A"}, {{"~A", "X", {{"~A", 1}}}}, {{"X", {{1, "~A", "X"}}}}, p);
    e.data = make_data({"X"}, {}, {{"X", 1}}, {{{"X", -1}}});
  } else if (stem == "bialg/4.1") {
    Scalar d = get("d"), b = get("b"), l = get("lambda");
    if (!starred) {
      e.summary = "[~A,X]=~A, [X,Y]=dY-lambda~A, delta(X)=~A^(X+bdY), delta(Y)=d~A^Y";
      e.bialgebra = make(kPrimal, {{"~A", "X", {{"~A", 1}}}, {"X", "Y", {{"Y", d}, {"~A", -l}}}},
                         {{"X", {{1, "~A", "X"}, {b * d, "~A", "Y"}}}, {"Y", {{d, "~A", "Y"}}}}, p);
      e.data = make_data({"X", "Y"}, {{"X", "Y", {{"Y", d}}}}, {{"X", 1}}, {{{"X", -1}, {"Y", -b * d}}, {{"Y", -d}}});
    } else {
      e.summary = "[~X,A]=-~X, [~Y,A]=-bd~X-d~Y, delta(~Y)=d~X^~Y, delta(A)=A^~X-lambda~X^~Y";
      e.bialgebra = make(kDual, {{"~X", "A", {{"~X", -1}}}, {"~Y", "A", {{"~X", -b * d}, {"~Y", -d}}}},
                         {{"~Y", {{d, "~X", "~Y"}}}, {"A", {{1, "A", "~X"}, {-l, "~X", "~Y"}}}}, p);
    }
  } else if (stem == "bialg/4.2") {
    Scalar d = get("d"), l = get("lambda");
    if (!starred) {
      e.summary = "[~A,X]=~A, [X,Y]=dY-lambda~A, delta(X)=Y^~A, delta(Y)=0";
      e.bialgebra = make(kPrimal, {{"~A", "X", {{"~A", 1}}}, {"X", "Y", {{"Y", d}, {"~A", -l}}}},
                         {{"X", {{1, "Y", "~A"}}}}, p);
      e.data = make_data({"X", "Y"}, {{"X", "Y", {{"Y", d}}}}, {{"X", 1}}, {{{"Y", 1}}, {}});
    } else {
      e.summary = "[~Y,A]=~X, delta(~Y)=d~X^~Y, delta(A)=A^~X-lambda~X^~Y";
      e.bialgebra = make(kDual, {{"~Y", "A", {{"~X", 1}}}},
                         {{"~Y", {{d, "~X", "~Y"}}}, {"A", {{1, "A", "~X"}, {-l, "~X", "~Y"}}}}, p);
    }
  } else if (stem == "bialg/4.3+") {
    Scalar l = get("lambda");
    if (!starred) {
      e.summary = "[~A,X]=-~A, [X,Y]=Y-lambda~A, delta(X)=~A^X, delta(Y)=(2X+Y)^~A";
      e.bialgebra = make(kPrimal, {{"~A", "X", {{"~A", -1}}}, {"X", "Y", {{"Y", 1}, {"~A", -l}}}},
                         {{"X", {{1, "~A", "X"}}}, {"Y", {{2, "X", "~A"}, {1, "Y", "~A"}}}}, p);
      e.data = make_data({"X", "Y"}, {{"X", "Y", {{"Y", 1}}}}, {{"X", -1}}, {{{"X", -1}}, {{"X", 2}, {"Y", 1}}});
    } else {
      e.summary = "[~X,A]=-~X+2~Y, [~Y,A]=~Y, delta(~Y)=~X^~Y, delta(A)=~X^A-lambda~X^~Y";
      e.bialgebra = make(kDual, {{"~X", "A", {{"~X", -1}, {"~Y", 2}}}, {"~Y", "A", {{"~Y", 1}}}},
                         {{"~Y", {{1, "~X", "~Y"}}}, {"A", {{1, "~X", "A"}, {-l, "~X", "~Y"}}}}, p);
    }
  } else if (stem == "bialg/4.3=0") {
    Scalar l = get("lambda");
    if (!starred) {
      e.summary = "[~A,X]=-2~A, [X,Y]=2Y-lambda~A, delta(Y)=X^~A";
      e.bialgebra = make(kPrimal, {{"~A", "X", {{"~A", -2}}}, {"X", "Y", {{"Y", 2}, {"~A", -l}}}},
                         {{"Y", {{1, "X", "~A"}}}}, p);
      e.data = make_data({"X", "Y"}, {{"X", "Y", {{"Y", 2}}}}, {{"X", -2}}, {{}, {{"X", 1}}});
    } else {
      e.summary = "[~X,A]=~Y, delta(~Y)=2~X^~Y, delta(A)=-2A^~X+lambda~Y^~X";
      e.bialgebra = make(kDual, {{"~X", "A", {{"~Y", 1}}}},
                         {{"~Y", {{2, "~X", "~Y"}}}, {"A", {{-2, "A", "~X"}, {l, "~Y", "~X"}}}}, p);
    }
  } else if (stem == "bialg/4.3-") {
    Scalar l = get("lambda");
    if (!starred) {
      e.summary = "[~A,X]=-~A, [X,Y]=Y-lambda~A, delta(X)=~A^Y, delta(Y)=X^~A";
      e.bialgebra = make(kPrimal, {{"~A", "X", {{"~A", -1}}}, {"X", "Y", {{"Y", 1}, {"~A", -l}}}},
                         {{"X", {{1, "~A", "Y"}}}, {"Y", {{1, "X", "~A"}}}}, p);
      e.data = make_data({"X", "Y"}, {{"X", "Y", {{"Y", 1}}}}, {{"X", -1}}, {{{"Y", -1}}, {{"X", 1}}});
    } else {
      e.summary = "[~X,A]=~Y, [~Y,A]=-~X, delta(~Y)=~X^~Y, delta(A)=~X^A-lambda~X^~Y";
      e.bialgebra = make(kDual, {{"~X", "A", {{"~Y", 1}}}, {"~Y", "A", {{"~X", -1}}}},
                         {{"~Y", {{1, "~X", "~Y"}}}, {"A", {{1, "~X", "A"}, {-l, "~X", "~Y"}}}}, p);
    }
  } else if (base == "bialg/2dim") {
    e.summary = "[A,X]=X, delta(X)=qX^A";
    e.bialgebra = make({"A", "X"}, {{"A", "X", {{"X", 1}}}}, {{"X", {{get("q"), "X", "A"}}}}, p);
  } else if (base == "bialg/Uq-su2" || base == "bialg/Uq-su11") {
    Scalar l = get("logq"), k = get("kappa");
    int sgn = base == "bialg/Uq-su2" ? 1 : -1;
    e.summary = sgn > 0 ? "U_q(su2): [H,X]=Y, [H,Y]=-X, [X,Y]=kappa H, delta(X)=2logq H^X, delta(Y)=2logq H^Y"
                        : "U_q(su11): [H,X]=-Y, [H,Y]=X, [X,Y]=kappa H, delta(X)=2logq H^X, delta(Y)=2logq H^Y";
    e.bialgebra = make(kHXY, {{"H", "X", {{"Y", sgn}}}, {"H", "Y", {{"X", -sgn}}}, {"X", "Y", {{"H", k}}}},
                       {{"X", {{2 * l, "H", "X"}}}, {"Y", {{2 * l, "H", "Y"}}}}, p);
  } else if (base == "bialg/Uq-sl2R") {
    Scalar r = get("r"), rs = get("rs");
    e.summary = "U_q(sl2R): [H,X]=2X, [H,Y]=-2Y, [X,Y]=rs H, delta(X)=rH^X, delta(Y)=rH^Y";
    e.bialgebra = make(kHXY, {{"H", "X", {{"X", 2}}}, {"H", "Y", {{"Y", -2}}}, {"X", "Y", {{"H", rs}}}},
                       {{"X", {{r, "H", "X"}}}, {"Y", {{r, "H", "Y"}}}}, p);
  } else if (base == "bialg/SUq-2" || base == "bialg/SUq-11") {
    Scalar l = get("logq"), qi = get("qinv");
    bool compact = base == "bialg/SUq-2";
    e.summary = compact ? "SU_q(2): [H,X]=2logq X, [H,Y]=2logq Y, delta(H)=qinv X^Y, delta(X)=Y^H, delta(Y)=H^X"
                        : "SU_q(1,1): [H,X]=2logq X, [H,Y]=2logq Y, delta(H)=qinv Y^X, delta(X)=Y^H, delta(Y)=H^X";
    e.bialgebra = make(kHXY, {{"H", "X", {{"X", 2 * l}}}, {"H", "Y", {{"Y", 2 * l}}}},
                       {{"H", {{compact ? qi : -qi, "X", "Y"}}}, {"X", {{1, "Y", "H"}}}, {"Y", {{1, "H", "X"}}}}, p);
  } else if (base == "bialg/SLq-2R") {
    Scalar r = get("r");
    e.summary = "SL_q(2,R): [H,X]=-rX, [H,Y]=-rY, delta(H)=X^Y, delta(X)=2H^X, delta(Y)=2Y^H";
    e.bialgebra = make(kHXY, {{"H", "X", {{"X", -r}}}, {"H", "Y", {{"Y", -r}}}},
                       {{"H", {{1, "X", "Y"}}}, {"X", {{2, "H", "X"}}}, {"Y", {{2, "Y", "H"}}}}, p);
  } else if (base == "bialg/Umu-e2") {
    Scalar m = get("m");
    e.summary = "U_mu(e2): [H,X]=-mY, [H,Y]=mX, delta(X)=2H^X, delta(Y)=2H^Y";
    e.bialgebra = make(kHXY, {{"H", "X", {{"Y", -m}}}, {"H", "Y", {{"X", m}}}},
                       {{"X", {{2, "H", "X"}}}, {"Y", {{2, "H", "Y"}}}}, p);
  } else if (base == "bialg/Emu-2") {
    Scalar m = get("m");
    e.summary = "E_mu(2): [H,X]=mX, [H,Y]=mY, delta(X)=2Y^H, delta(Y)=2H^X";
    e.bialgebra = make(kHXY, {{"H", "X", {{"X", m}}}, {"H", "Y", {{"Y", m}}}},
                       {{"X", {{2, "Y", "H"}}}, {"Y", {{2, "H", "X"}}}}, p);
  } else if (base == "bialg/selfdual-1") {
    Scalar mr = get("mr"), mi = get("mi"), s = get("s");
    Scalar lr = s * mr, li = s * mi;
    e.summary = "[H,X]=-mi X-mr Y, [H,Y]=mr X-mi Y, delta(X)=(lr X-li Y)^H, delta(Y)=(li X+lr Y)^H, l=s m";
    e.bialgebra = make(kHXY, {{"H", "X", {{"X", -mi}, {"Y", -mr}}}, {"H", "Y", {{"X", mr}, {"Y", -mi}}}},
                       {{"X", {{lr, "X", "H"}, {-li, "Y", "H"}}}, {"Y", {{li, "X", "H"}, {lr, "Y", "H"}}}}, p);
  } else if (base == "bialg/selfdual-2") {
    Scalar a = get("alpha"), b = get("beta");
    e.summary = "[H,X]=X, [H,Y]=alpha Y, delta(X)=beta X^H, delta(Y)=alpha beta H^Y";
    e.bialgebra = make(kHXY, {{"H", "X", {{"X", 1}}}, {"H", "Y", {{"Y", a}}}},
                       {{"X", {{b, "X", "H"}}}, {"Y", {{a * b, "H", "Y"}}}}, p);
  } else if (base == "bialg/isolated") {
    e.summary = "[H,X]=2X, [H,Y]=-2Y, [X,Y]=H, delta(H)=H^Y, delta(X)=X^Y";
    e.bialgebra = make(kHXY, {{"H", "X", {{"X", 2}}}, {"H", "Y", {{"Y", -2}}}, {"X", "Y", {{"H", 1}}}},
                       {{"H", {{1, "H", "Y"}}}, {"X", {{1, "X", "Y"}}}}, p);
  }
  return e;
}

BialgebraEntry bialgebra_entry(std::string_view full_name) {
  EntryName n = parse_entry_name(full_name);
  return make_bialgebra_entry(n.base, parse_params(n, bialgebra_parameter_keys(n.base)));
}

std::vector<BialgebraEntry> catalog_bialgebras() {
  std::vector<BialgebraEntry> out;
  for (const auto& name : bialgebra_names()) out.push_back(make_bialgebra_entry(name));
  return out;
}

std::optional<SelfDuality> self_duality(const BialgebraEntry& e) {
  if (e.name == "bialg/1+1") {
    // ~X -> -~A, A -> -X
    return SelfDuality{e.full_name(), Matrix::from_columns(2, {{0, -1}, {-1, 0}})};
  }
  if (e.name == "bialg/selfdual-1") {
    Scalar mr = e.params.at("mr"), mi = e.params.at("mi"), s = e.params.at("s");
    if (s == 0) return std::nullopt;
    return SelfDuality{format_entry_name(e.name, {{"mr", s * mi}, {"mi", s * mr}, {"s", 1 / s}}), Matrix::identity(3)};
  }
  if (e.name == "bialg/selfdual-2") {
    Scalar a = e.params.at("alpha"), b = e.params.at("beta");
    if (b == 0) return std::nullopt;
    // ~H -> -beta H', ~X -> X', ~Y -> Y'
    return SelfDuality{format_entry_name(e.name, {{"alpha", -a}, {"beta", b}}),
                       Matrix::from_columns(3, {{-b, 0, 0}, {0, 1, 0}, {0, 0, 1}})};
  }
  return std::nullopt;
}

}  // namespace bicross
