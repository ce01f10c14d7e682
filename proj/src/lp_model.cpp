#include "matex/lp_model.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace matex::lp {

namespace {

// Accumulates +-1 terms by subset, dropping g({}) and zero coefficients.
struct RowBuilder {
  std::map<Mask, int> coefs;
  void add(Mask s, int c) {
    if (s == 0 || c == 0) return;
    coefs[s] += c;
    if (coefs[s] == 0) coefs.erase(s);
  }
  Row finish(Row::Rel rel, std::string label) const {
    Row r;
    r.rel = rel;
    r.rhs = 0;
    r.label = std::move(label);
    for (auto [s, c] : coefs) r.terms.push_back({s, c});
    return r;
  }
};

}  // namespace

std::vector<Row> build_shannon(int n) {
  std::vector<Row> rows;
  const Mask full = full_mask(n);
  for (int i = 0; i < n; ++i) {
    RowBuilder b;
    b.add(full, 1);
    b.add(full & ~bit(i), -1);
    rows.push_back(b.finish(Row::Rel::Ge, "mono " + std::string(1, element_char(i))));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Mask ij = bit(i) | bit(j);
      for (Mask k = 0; k <= full; ++k) {
        if (k & ij) continue;
        RowBuilder b;
        b.add(k | bit(i), 1);
        b.add(k | bit(j), 1);
        b.add(k | ij, -1);
        b.add(k, -1);
        rows.push_back(b.finish(Row::Rel::Ge, "sub " + std::string(1, element_char(i)) +
                                                  std::string(1, element_char(j)) + "|" +
                                                  format_mask(k)));
      }
    }
  }
  return rows;
}

std::vector<Row> build_step_rows(const ExtensionStep& step, int context_n,
                                 const std::vector<int>& new_elements) {
  const Mask ctx = full_mask(context_n);
  if (!contains(ctx, step.x) || !contains(ctx, step.y) || !contains(ctx, step.x2))
    throw std::invalid_argument("extension step references elements outside its ground set");
  std::vector<Row> rows;
  switch (step.kind) {
    case ExtensionStep::Kind::CI: {
      const Mask z = bit(new_elements.at(0));
      const Mask x = step.x, y = step.y;
      RowBuilder b1;  // g(Z|X) = 0
      b1.add(x | z, 1);
      b1.add(x, -1);
      rows.push_back(b1.finish(Row::Rel::Eq, "ci g(Z|X)=0"));
      RowBuilder b2;  // g(Z|Y) = 0
      b2.add(y | z, 1);
      b2.add(y, -1);
      rows.push_back(b2.finish(Row::Rel::Eq, "ci g(Z|Y)=0"));
      RowBuilder b3;  // g(X:Y|Z) = 0
      b3.add(x | z, 1);
      b3.add(y | z, 1);
      b3.add(x | y | z, -1);
      b3.add(z, -1);
      rows.push_back(b3.finish(Row::Rel::Eq, "ci g(X:Y|Z)=0"));
      break;
    }
    case ExtensionStep::Kind::AK: {
      const Mask z = bit(new_elements.at(0));
      const Mask x = step.x, y = step.y;
      RowBuilder b1;  // g(Z|X) = 0
      b1.add(x | z, 1);
      b1.add(x, -1);
      rows.push_back(b1.finish(Row::Rel::Eq, "ak g(Z|X)=0"));
      // g(X'|Z) = g(X'|Y) for every nonempty X' of X
      for_each_submask(x, [&](Mask s) {
        if (s == 0) return;
        RowBuilder b;
        b.add(s | z, 1);
        b.add(z, -1);
        b.add(s | y, -1);
        b.add(y, 1);
        rows.push_back(b.finish(Row::Rel::Eq, "ak g(" + format_mask(s) + "|Z)=g(.|Y)"));
      });
      break;
    }
    case ExtensionStep::Kind::CL: {
      const Mask x1 = step.x, x2 = step.x2, y = step.y;
      const auto ys = elements(y);
      if (ys.size() != new_elements.size())
        throw std::invalid_argument("copy step: |Z| must equal |Y|");
      Mask z = 0;
      for (int e : new_elements) z |= bit(e);
      // phi maps the i-th element of Y to the i-th new element.
      auto phi = [&](Mask t) {
        Mask m = 0;
        for (std::size_t i = 0; i < ys.size(); ++i)
          if (t & bit(ys[i])) m |= bit(new_elements[i]);
        return m;
      };
      // Isomorphism between (X1 Y, g restricted) and (X1 Z, g restricted):
      // g(S u phi(T)) = g(S u T) for S <= X1, T <= Y.
      for_each_submask(x1, [&](Mask s) {
        for_each_submask(y, [&](Mask t) {
          if (t == 0) return;
          RowBuilder b;
          b.add(s | phi(t), 1);
          b.add(s | t, -1);
          rows.push_back(b.finish(
              Row::Rel::Eq, "cl iso " + format_mask(s) + "+" + format_mask(t)));
        });
      });
      RowBuilder b;  // g(Z : X2 Y | X1) = 0
      b.add(z | x1, 1);
      b.add(x2 | y | x1, 1);
      b.add(z | x2 | y | x1, -1);
      b.add(x1, -1);
      rows.push_back(b.finish(Row::Rel::Eq, "cl g(Z:X2Y|X1)=0"));
      break;
    }
  }
  return rows;
}

namespace {

// Folds pinned variables of a raw row into the rhs; returns false when the
// row has no unpinned term left (caller decides what that means).
bool pin_row(const LPModel& model, Row& r) {
  std::vector<RowTerm> kept;
  for (const RowTerm& t : r.terms) {
    if (model.is_pinned(t.subset))
      r.rhs -= t.coef * model.base.at(t.subset);
    else
      kept.push_back(t);
  }
  r.terms = std::move(kept);
  return !r.terms.empty();
}

}  // namespace

LPModel build_chain_model(const Polymatroid& base, const std::vector<ExtensionStep>& steps) {
  LPModel model;
  model.base_n = base.n();
  model.base = base.f();
  model.steps = steps;
  int n = base.n();
  for (const ExtensionStep& st : steps) {
    std::vector<int> ids;
    for (int i = 0; i < st.new_element_count(); ++i) ids.push_back(n + i);
    // Step subsets must lie in the ground set available at that step.
    if (!contains(full_mask(n), st.x | st.y | st.x2))
      throw std::invalid_argument("extension step references elements outside its ground set");
    model.step_elements.push_back(std::move(ids));
    n += st.new_element_count();
  }
  if (n > 13)
    throw std::invalid_argument("augmented ground set exceeds the 13-element cap");
  model.total_n = n;

  model.var_index.assign(std::size_t{1} << n, -1);
  for (Mask s = 1; s <= model.full(); ++s) {
    if (model.is_pinned(s)) continue;
    model.var_index[s] = static_cast<int>(model.vars.size());
    model.vars.push_back(s);
  }

  std::vector<Row> shannon = build_shannon(n);
  model.shannon_row_count = shannon.size();
  for (Row& r : shannon) {
    if (pin_row(model, r)) {
      model.rows.push_back(std::move(r));
    } else {
      // Fully inside the base: satisfied because the base is a polymatroid.
      if (r.rhs > 0) throw std::logic_error("base polymatroid violates a Shannon row");
      ++model.dropped_base_rows;
    }
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    int context = model.step_elements[i].front();
    std::vector<Row> srows = build_step_rows(steps[i], context, model.step_elements[i]);
    for (Row& r : srows) {
      r.label = "step" + std::to_string(i + 1) + " " + r.label;
      if (!pin_row(model, r))
        throw std::logic_error("step row with no free variable");
      model.rows.push_back(std::move(r));
      ++model.step_row_count;
    }
  }
  return model;
}

Rat LPModel::row_slack(const Row& r, const SetFunction& g) const {
  Rat v(0);
  for (const RowTerm& t : r.terms) {
    if (t.coef == 1)
      v += g.at(t.subset);
    else if (t.coef == -1)
      v -= g.at(t.subset);
    else
      v += t.coef * g.at(t.subset);
  }
  return v - r.rhs;
}

std::string dump_model(const LPModel& model) {
  std::ostringstream os;
  os << "feasibility-model v1 base_n=" << model.base_n << " total_n=" << model.total_n
     << " vars=" << model.vars.size() << " rows=" << model.rows.size()
     << " shannon=" << model.shannon_row_count << " dropped_base=" << model.dropped_base_rows
     << " step_rows=" << model.step_row_count << "\n";
  for (Mask s = 1; s <= full_mask(model.base_n); ++s)
    os << "pin " << format_mask(s) << " = " << rat_str(model.base.at(s)) << "\n";
  for (const Row& r : model.rows) {
    bool first = true;
    for (const RowTerm& t : r.terms) {
      if (!first) os << " ";
      first = false;
      os << format_mask(t.subset) << ":" << t.coef;
    }
    os << (r.rel == Row::Rel::Ge ? " >= " : " == ") << rat_str(r.rhs) << "  # " << r.label
       << "\n";
  }
  return os.str();
}

}  // namespace matex::lp
