#include "functional.hpp"

#include <algorithm>

namespace grin {

LambekType LambekType::make_leaf(std::string g) {
  LambekType t;
  t.kind = Kind::Leaf;
  t.leaf = std::move(g);
  return t;
}

LambekType LambekType::make_over(LambekType u, LambekType v) {
  LambekType t;
  t.kind = Kind::Over;
  t.left = std::make_shared<LambekType>(std::move(u));
  t.right = std::make_shared<LambekType>(std::move(v));
  return t;
}

LambekType LambekType::make_under(LambekType u, LambekType v) {
  LambekType t;
  t.kind = Kind::Under;
  t.left = std::make_shared<LambekType>(std::move(u));
  t.right = std::make_shared<LambekType>(std::move(v));
  return t;
}

bool is_functional(System system, const Type& t) {
  if (t.system != system)
    throw Error(ErrorCode::SystemMismatch, "type is not in the requested system");
  switch (system) {
    case System::Autonomous:
      throw Error(ErrorCode::UnsupportedSystem, "functionality of autonomous types is out of scope");
    case System::Pivotal:
    case System::CompactClosed: {
      if (t.occs.size() == 1 && t.occs[0].exp == 1) return true;
      bool pos = false, neg = false;
      for (const auto& o : t.occs) (o.exp == 1 ? pos : neg) = true;
      return pos && neg;
    }
    case System::SelfDualPivotal:
    case System::SelfDualCompactClosed:
      return !t.is_unit();
  }
  return false;
}

Type lambek_image(const LambekType& l) {
  switch (l.kind) {
    case LambekType::Kind::Leaf:
      return make_type(System::Pivotal, {{l.leaf, 1}});
    case LambekType::Kind::Over:
      return tensor(lambek_image(*l.left), dual(lambek_image(*l.right)));
    case LambekType::Kind::Under:
      return tensor(dual(lambek_image(*l.left)), lambek_image(*l.right));
  }
  throw Error(ErrorCode::BadArgument, "bad lambek node");
}

namespace {

Type slice(const Type& t, size_t from, size_t to) {
  return Type{System::Pivotal, {t.occs.begin() + from, t.occs.begin() + to}};
}

bool all_sign(const Type& t, int sign) {
  return std::all_of(t.occs.begin(), t.occs.end(), [&](const Occ& o) { return o.exp == sign; });
}

}  // namespace

LambekType lambek_witness(const Type& t) {
  if (t.system != System::Pivotal)
    throw Error(ErrorCode::SystemMismatch, "lambek witnesses are built for pivotal words");
  if (!is_functional(System::Pivotal, t))
    throw Error(ErrorCode::NotFunctional, "type " + format_type(t) + " is not functional");
  const size_t n = t.occs.size();
  if (n == 1) return LambekType::make_leaf(t.occs[0].gen);

  const Occ& last = t.occs.back();
  const Type prefix = slice(t, 0, n - 1);
  const Type suffix = slice(t, 1, n);
  if (last.exp == -1) {
    if (is_functional(System::Pivotal, prefix))
      return LambekType::make_over(lambek_witness(prefix), LambekType::make_leaf(last.gen));
    if (all_sign(prefix, 1))
      return LambekType::make_over(LambekType::make_leaf(t.occs[0].gen), lambek_witness(dual(suffix)));
  } else {
    if (is_functional(System::Pivotal, dual(prefix)))
      return LambekType::make_under(lambek_witness(dual(prefix)), LambekType::make_leaf(last.gen));
    if (all_sign(prefix, -1))
      return LambekType::make_under(LambekType::make_leaf(t.occs[0].gen), lambek_witness(suffix));
  }
  throw Error(ErrorCode::NotFunctional, "no witness case applies to " + format_type(t));
}

std::string format_lambek(const LambekType& l) {
  switch (l.kind) {
    case LambekType::Kind::Leaf:
      return l.leaf;
    case LambekType::Kind::Over:
      return "(" + format_lambek(*l.left) + " / " + format_lambek(*l.right) + ")";
    case LambekType::Kind::Under:
      return "(" + format_lambek(*l.left) + " \\ " + format_lambek(*l.right) + ")";
  }
  return "?";
}

}  // namespace grin
