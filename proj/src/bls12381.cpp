#include "zkfingpt/bls12381.hpp"

#include <stdexcept>

namespace zkfingpt::bls12381 {

namespace {

const mpz_class& base_prime() {
  static const mpz_class p(
      "1a0111ea397fe69a4b1ba7b6434bacd764774b84f38512bf6730d2a0f6b0f6241eabfffeb153ffffb9feffff"
      "ffffaaab",
      16);
  return p;
}

const mpz_class& scalar_prime() {
  static const mpz_class r(
      "73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001", 16);
  return r;
}

// |x| for the ate loop; the BLS parameter x is negative.
const mpz_class& loop_count() {
  static const mpz_class x("d201000000010000", 16);
  return x;
}

// ---- Fp ----

Fp fp_make(mpz_class v) {
  mpz_mod(v.get_mpz_t(), v.get_mpz_t(), base_prime().get_mpz_t());
  return {std::move(v)};
}

Fp fp_zero() { return {mpz_class(0)}; }
Fp fp_one() { return {mpz_class(1)}; }
bool fp_is_zero(const Fp& a) { return a.v == 0; }

Fp fp_add(const Fp& a, const Fp& b) {
  mpz_class v = a.v + b.v;
  if (v >= base_prime()) v -= base_prime();
  return {std::move(v)};
}

Fp fp_sub(const Fp& a, const Fp& b) {
  mpz_class v = a.v - b.v;
  if (v < 0) v += base_prime();
  return {std::move(v)};
}

Fp fp_neg(const Fp& a) {
  if (a.v == 0) return a;
  return {base_prime() - a.v};
}

Fp fp_mul(const Fp& a, const Fp& b) {
  mpz_class v = a.v * b.v;
  mpz_mod(v.get_mpz_t(), v.get_mpz_t(), base_prime().get_mpz_t());
  return {std::move(v)};
}

Fp fp_sq(const Fp& a) { return fp_mul(a, a); }

Fp fp_inv(const Fp& a) {
  if (a.v == 0) throw std::domain_error("bls12381: inverse of zero");
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.v.get_mpz_t(), base_prime().get_mpz_t());
  return {std::move(r)};
}

// ---- Fp2 = Fp[u]/(u^2 + 1) ----

Fp2 fp2_zero() { return {fp_zero(), fp_zero()}; }
Fp2 fp2_one() { return {fp_one(), fp_zero()}; }
bool fp2_is_zero(const Fp2& a) { return fp_is_zero(a.c0) && fp_is_zero(a.c1); }

Fp2 fp2_add(const Fp2& a, const Fp2& b) { return {fp_add(a.c0, b.c0), fp_add(a.c1, b.c1)}; }
Fp2 fp2_sub(const Fp2& a, const Fp2& b) { return {fp_sub(a.c0, b.c0), fp_sub(a.c1, b.c1)}; }
Fp2 fp2_neg(const Fp2& a) { return {fp_neg(a.c0), fp_neg(a.c1)}; }

Fp2 fp2_mul(const Fp2& a, const Fp2& b) {
  const Fp t0 = fp_mul(a.c0, b.c0);
  const Fp t1 = fp_mul(a.c1, b.c1);
  const Fp cross = fp_add(fp_mul(a.c0, b.c1), fp_mul(a.c1, b.c0));
  return {fp_sub(t0, t1), cross};
}

Fp2 fp2_sq(const Fp2& a) { return fp2_mul(a, a); }

Fp2 fp2_inv(const Fp2& a) {
  const Fp norm = fp_add(fp_sq(a.c0), fp_sq(a.c1));
  const Fp inv_norm = fp_inv(norm);
  return {fp_mul(a.c0, inv_norm), fp_mul(fp_neg(a.c1), inv_norm)};
}

// xi = u + 1, the cubic/sextic nonresidue stacking the tower.
Fp2 fp2_xi() { return {fp_one(), fp_one()}; }

// ---- Fp6 = Fp2[v]/(v^3 - xi) ----

Fp6 fp6_zero() { return {fp2_zero(), fp2_zero(), fp2_zero()}; }
Fp6 fp6_one() { return {fp2_one(), fp2_zero(), fp2_zero()}; }
bool fp6_is_zero(const Fp6& a) {
  return fp2_is_zero(a.c0) && fp2_is_zero(a.c1) && fp2_is_zero(a.c2);
}

Fp6 fp6_add(const Fp6& a, const Fp6& b) {
  return {fp2_add(a.c0, b.c0), fp2_add(a.c1, b.c1), fp2_add(a.c2, b.c2)};
}
Fp6 fp6_sub(const Fp6& a, const Fp6& b) {
  return {fp2_sub(a.c0, b.c0), fp2_sub(a.c1, b.c1), fp2_sub(a.c2, b.c2)};
}
Fp6 fp6_neg(const Fp6& a) { return {fp2_neg(a.c0), fp2_neg(a.c1), fp2_neg(a.c2)}; }

Fp6 fp6_mul(const Fp6& a, const Fp6& b) {
  const Fp2 xi = fp2_xi();
  const Fp2 a0b0 = fp2_mul(a.c0, b.c0);
  const Fp2 a0b1 = fp2_mul(a.c0, b.c1);
  const Fp2 a0b2 = fp2_mul(a.c0, b.c2);
  const Fp2 a1b0 = fp2_mul(a.c1, b.c0);
  const Fp2 a1b1 = fp2_mul(a.c1, b.c1);
  const Fp2 a1b2 = fp2_mul(a.c1, b.c2);
  const Fp2 a2b0 = fp2_mul(a.c2, b.c0);
  const Fp2 a2b1 = fp2_mul(a.c2, b.c1);
  const Fp2 a2b2 = fp2_mul(a.c2, b.c2);
  return {fp2_add(a0b0, fp2_mul(xi, fp2_add(a1b2, a2b1))),
          fp2_add(fp2_add(a0b1, a1b0), fp2_mul(xi, a2b2)),
          fp2_add(fp2_add(a0b2, a1b1), a2b0)};
}

// v * (x + y v + z v^2) = xi*z + x v + y v^2
Fp6 fp6_mul_by_v(const Fp6& a) { return {fp2_mul(fp2_xi(), a.c2), a.c0, a.c1}; }

Fp6 fp6_inv(const Fp6& el) {
  const Fp2 xi = fp2_xi();
  const Fp2& a = el.c0;
  const Fp2& b = el.c1;
  const Fp2& c = el.c2;
  const Fp2 big_a = fp2_sub(fp2_sq(a), fp2_mul(xi, fp2_mul(b, c)));
  const Fp2 big_b = fp2_sub(fp2_mul(xi, fp2_sq(c)), fp2_mul(a, b));
  const Fp2 big_c = fp2_sub(fp2_sq(b), fp2_mul(a, c));
  const Fp2 delta = fp2_add(
      fp2_mul(a, big_a),
      fp2_mul(xi, fp2_add(fp2_mul(b, big_c), fp2_mul(c, big_b))));
  const Fp2 inv_delta = fp2_inv(delta);
  return {fp2_mul(big_a, inv_delta), fp2_mul(big_b, inv_delta), fp2_mul(big_c, inv_delta)};
}

// ---- Fp12 = Fp6[w]/(w^2 - v) ----

Fp12 fp12_one() { return {fp6_one(), fp6_zero()}; }
bool fp12_is_zero(const Fp12& a) { return fp6_is_zero(a.c0) && fp6_is_zero(a.c1); }

Fp12 fp12_mul(const Fp12& a, const Fp12& b) {
  const Fp6 a0b0 = fp6_mul(a.c0, b.c0);
  const Fp6 a1b1 = fp6_mul(a.c1, b.c1);
  const Fp6 cross = fp6_add(fp6_mul(a.c0, b.c1), fp6_mul(a.c1, b.c0));
  return {fp6_add(a0b0, fp6_mul_by_v(a1b1)), cross};
}

Fp12 fp12_sq(const Fp12& a) { return fp12_mul(a, a); }

Fp12 fp12_inv(const Fp12& a) {
  const Fp6 delta = fp6_sub(fp6_mul(a.c0, a.c0), fp6_mul_by_v(fp6_mul(a.c1, a.c1)));
  const Fp6 inv_delta = fp6_inv(delta);
  return {fp6_mul(a.c0, inv_delta), fp6_neg(fp6_mul(a.c1, inv_delta))};
}

Fp12 fp12_pow(const Fp12& base, const mpz_class& exp) {
  if (exp == 0) return fp12_one();
  Fp12 acc = fp12_one();
  const size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  for (size_t i = bits; i > 0; --i) {
    acc = fp12_sq(acc);
    if (mpz_tstbit(exp.get_mpz_t(), i - 1)) acc = fp12_mul(acc, base);
  }
  return acc;
}

// Embeddings up the tower.
Fp12 fp12_from_fp(const Fp& a) {
  Fp6 c0 = fp6_zero();
  c0.c0 = {a, fp_zero()};
  return {c0, fp6_zero()};
}

Fp12 fp12_from_fp2(const Fp2& a) {
  Fp6 c0 = fp6_zero();
  c0.c0 = a;
  return {c0, fp6_zero()};
}

// (p^12 - 1) / r, computed once.
const mpz_class& final_exponent() {
  static const mpz_class e = [] {
    mpz_class p12;
    mpz_pow_ui(p12.get_mpz_t(), base_prime().get_mpz_t(), 12);
    mpz_class num = p12 - 1;
    mpz_class q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), scalar_prime().get_mpz_t());
    if (rem != 0) throw std::logic_error("bls12381: r does not divide p^12 - 1");
    return q;
  }();
  return e;
}

// ---- generic affine short-Weierstrass arithmetic (a = 0) ----

template <class F>
struct FieldOps;

template <>
struct FieldOps<Fp> {
  static Fp add(const Fp& a, const Fp& b) { return fp_add(a, b); }
  static Fp sub(const Fp& a, const Fp& b) { return fp_sub(a, b); }
  static Fp mul(const Fp& a, const Fp& b) { return fp_mul(a, b); }
  static Fp sq(const Fp& a) { return fp_sq(a); }
  static Fp inv(const Fp& a) { return fp_inv(a); }
  static Fp neg(const Fp& a) { return fp_neg(a); }
  static bool is_zero(const Fp& a) { return fp_is_zero(a); }
  static Fp from_small(unsigned n) { return fp_make(mpz_class(n)); }
};

template <>
struct FieldOps<Fp2> {
  static Fp2 add(const Fp2& a, const Fp2& b) { return fp2_add(a, b); }
  static Fp2 sub(const Fp2& a, const Fp2& b) { return fp2_sub(a, b); }
  static Fp2 mul(const Fp2& a, const Fp2& b) { return fp2_mul(a, b); }
  static Fp2 sq(const Fp2& a) { return fp2_sq(a); }
  static Fp2 inv(const Fp2& a) { return fp2_inv(a); }
  static Fp2 neg(const Fp2& a) { return fp2_neg(a); }
  static bool is_zero(const Fp2& a) { return fp2_is_zero(a); }
  static Fp2 from_small(unsigned n) { return {fp_make(mpz_class(n)), fp_zero()}; }
};

template <>
struct FieldOps<Fp12> {
  static Fp12 add(const Fp12& a, const Fp12& b) {
    return {fp6_add(a.c0, b.c0), fp6_add(a.c1, b.c1)};
  }
  static Fp12 sub(const Fp12& a, const Fp12& b) {
    return {fp6_sub(a.c0, b.c0), fp6_sub(a.c1, b.c1)};
  }
  static Fp12 mul(const Fp12& a, const Fp12& b) { return fp12_mul(a, b); }
  static Fp12 sq(const Fp12& a) { return fp12_sq(a); }
  static Fp12 inv(const Fp12& a) { return fp12_inv(a); }
  static Fp12 neg(const Fp12& a) { return {fp6_neg(a.c0), fp6_neg(a.c1)}; }
  static bool is_zero(const Fp12& a) { return fp12_is_zero(a); }
  static Fp12 from_small(unsigned n) { return fp12_from_fp(fp_make(mpz_class(n))); }
};

template <class F>
struct Pt {
  F x{}, y{};
  bool inf = true;
};

template <class F>
Pt<F> pt_neg(const Pt<F>& p) {
  if (p.inf) return p;
  return {p.x, FieldOps<F>::neg(p.y), false};
}

template <class F>
Pt<F> pt_double(const Pt<F>& p) {
  using Ops = FieldOps<F>;
  if (p.inf || Ops::is_zero(p.y)) return {};
  // lambda = 3x^2 / 2y
  const F three_x2 = Ops::mul(Ops::from_small(3), Ops::sq(p.x));
  const F lambda = Ops::mul(three_x2, Ops::inv(Ops::add(p.y, p.y)));
  const F x3 = Ops::sub(Ops::sq(lambda), Ops::add(p.x, p.x));
  const F y3 = Ops::sub(Ops::mul(lambda, Ops::sub(p.x, x3)), p.y);
  return {x3, y3, false};
}

template <class F>
Pt<F> pt_add(const Pt<F>& p, const Pt<F>& q) {
  using Ops = FieldOps<F>;
  if (p.inf) return q;
  if (q.inf) return p;
  if (p.x == q.x) {
    if (p.y == q.y) return pt_double(p);
    return {};
  }
  const F lambda = Ops::mul(Ops::sub(q.y, p.y), Ops::inv(Ops::sub(q.x, p.x)));
  const F x3 = Ops::sub(Ops::sub(Ops::sq(lambda), p.x), q.x);
  const F y3 = Ops::sub(Ops::mul(lambda, Ops::sub(p.x, x3)), p.y);
  return {x3, y3, false};
}

template <class F>
Pt<F> pt_scalar_mul(const Pt<F>& p, const mpz_class& k) {
  if (k == 0 || p.inf) return {};
  Pt<F> acc{};
  const size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
  for (size_t i = bits; i > 0; --i) {
    acc = pt_double(acc);
    if (mpz_tstbit(k.get_mpz_t(), i - 1)) acc = pt_add(acc, p);
  }
  return acc;
}

Pt<Fp> to_pt(const G1Affine& p) {
  if (p.infinity) return {};
  return {p.x, p.y, false};
}

G1Affine from_pt(const Pt<Fp>& p) {
  if (p.inf) return {};
  return {p.x, p.y, false};
}

Pt<Fp2> to_pt(const G2Affine& p) {
  if (p.infinity) return {};
  return {p.x, p.y, false};
}

G2Affine from_pt2(const Pt<Fp2>& p) {
  if (p.inf) return {};
  return {p.x, p.y, false};
}

// ---- generators ----

G1Affine g1_gen() {
  return {fp_make(mpz_class(
              "17f1d3a73197d7942695638c4fa9ac0fc3688c4f9774b905a14e3a3f171bac586c55e83ff97a1aeff"
              "b3af00adb22c6bb",
              16)),
          fp_make(mpz_class(
              "08b3f481e3aaa0f1a09e30ed741d8ae4fcf5e095d5d00af600db18cb2c04b3edd03cc744a2888ae4"
              "0caa232946c5e7e1",
              16)),
          false};
}

G2Affine g2_gen() {
  const Fp2 x = {fp_make(mpz_class(
                     "024aa2b2f08f0a91260805272dc51051c6e47ad4fa403b02b4510b647ae3d1770bac0326a8"
                     "05bbefd48056c8c121bdb8",
                     16)),
                 fp_make(mpz_class(
                     "13e02b6052719f607dacd3a088274f65596bd0d09920b61ab5da61bbdc7f5049334cf11213"
                     "945d57e5ac7d055d042b7e",
                     16))};
  const Fp2 y = {fp_make(mpz_class(
                     "0ce5d527727d6e118cc9cdc6da2e351aadfd9baa8cbdd3a76d429a695160d12c923ac9cc3b"
                     "aca289e193548608b82801",
                     16)),
                 fp_make(mpz_class(
                     "0606c4a02ea734cc32acd2b02bc28b99cb3e287e85a763af267492ab572e99ab3f370d275c"
                     "ec1da1aaa9075ff05f79be",
                     16))};
  return {x, y, false};
}

// Untwist (x', y') on E'/Fp2 : y^2 = x^3 + 4*xi into E(Fp12) : y^2 = x^3 + 4
// via (x' * w^-2, y' * w^-3); w^6 = xi makes the curve equation land on b = 4.
const Fp12& untwist_x_factor() {
  static const Fp12 f = [] {
    Fp12 w_sq{fp6_zero(), fp6_zero()};
    w_sq.c0 = fp6_mul_by_v(fp6_one());  // w^2 = v
    return fp12_inv(w_sq);
  }();
  return f;
}

const Fp12& untwist_y_factor() {
  static const Fp12 f = [] {
    Fp12 w{fp6_zero(), fp6_one()};  // w
    Fp12 w_cu = fp12_mul(fp12_mul(w, w), w);
    return fp12_inv(w_cu);
  }();
  return f;
}

Pt<Fp12> lift_g1(const G1Affine& p) {
  if (p.infinity) return {};
  return {fp12_from_fp(p.x), fp12_from_fp(p.y), false};
}

Pt<Fp12> lift_g2(const G2Affine& q) {
  if (q.infinity) return {};
  return {fp12_mul(fp12_from_fp2(q.x), untwist_x_factor()),
          fp12_mul(fp12_from_fp2(q.y), untwist_y_factor()), false};
}

// Line through T (tangent) or through T and Q, evaluated at P.
Fp12 line_tangent(const Pt<Fp12>& t, const Pt<Fp12>& p) {
  using Ops = FieldOps<Fp12>;
  const Fp12 lambda =
      Ops::mul(Ops::mul(Ops::sq(t.x), fp12_from_fp(fp_make(mpz_class(3)))),
               Ops::inv(Ops::add(t.y, t.y)));
  return Ops::sub(Ops::sub(p.y, t.y), Ops::mul(lambda, Ops::sub(p.x, t.x)));
}

Fp12 line_through(const Pt<Fp12>& t, const Pt<Fp12>& q, const Pt<Fp12>& p) {
  using Ops = FieldOps<Fp12>;
  const Fp12 lambda = Ops::mul(Ops::sub(q.y, t.y), Ops::inv(Ops::sub(q.x, t.x)));
  return Ops::sub(Ops::sub(p.y, t.y), Ops::mul(lambda, Ops::sub(p.x, t.x)));
}

void fp_to_be48(const Fp& a, std::vector<uint8_t>& out) {
  std::vector<uint8_t> tmp(48, 0);
  size_t count = 0;
  mpz_export(tmp.data(), &count, -1, 1, 0, 0, a.v.get_mpz_t());
  // little-endian export, emit big-endian
  for (size_t i = 0; i < 48; ++i) out.push_back(tmp[47 - i]);
}

Fp fp_from_be48(std::span<const uint8_t> bytes) {
  mpz_class v;
  mpz_import(v.get_mpz_t(), 48, 1, 1, 0, 0, bytes.data());
  if (v >= base_prime()) throw std::runtime_error("bls12381: coordinate out of range");
  return {std::move(v)};
}

}  // namespace

Bls12381Group::Bls12381Group() : scalar_params_(FieldParams::bls12381_scalar()) {}

G1Affine Bls12381Group::g1_generator() const { return g1_gen(); }
G2Affine Bls12381Group::g2_generator() const { return g2_gen(); }

G1Affine Bls12381Group::g1_add(const G1& a, const G1& b) const {
  return from_pt(pt_add(to_pt(a), to_pt(b)));
}

G1Affine Bls12381Group::g1_neg(const G1& a) const { return from_pt(pt_neg(to_pt(a))); }

G1Affine Bls12381Group::g1_mul(const G1& p, const FieldElement& scalar) const {
  return from_pt(pt_scalar_mul(to_pt(p), scalar.value()));
}

G2Affine Bls12381Group::g2_add(const G2& a, const G2& b) const {
  return from_pt2(pt_add(to_pt(a), to_pt(b)));
}

G2Affine Bls12381Group::g2_sub(const G2& a, const G2& b) const {
  return from_pt2(pt_add(to_pt(a), pt_neg(to_pt(b))));
}

G2Affine Bls12381Group::g2_mul(const G2& p, const FieldElement& scalar) const {
  return from_pt2(pt_scalar_mul(to_pt(p), scalar.value()));
}

Fp12 Bls12381Group::pairing(const G1& p, const G2& q) const {
  if (p.infinity || q.infinity) return fp12_one();
  const Pt<Fp12> pl = lift_g1(p);
  const Pt<Fp12> ql = lift_g2(q);

  Fp12 f = fp12_one();
  Pt<Fp12> t = ql;
  const mpz_class& c = loop_count();
  const size_t bits = mpz_sizeinbase(c.get_mpz_t(), 2);
  for (size_t i = bits - 1; i > 0; --i) {
    f = fp12_mul(fp12_sq(f), line_tangent(t, pl));
    t = pt_double(t);
    if (mpz_tstbit(c.get_mpz_t(), i - 1)) {
      f = fp12_mul(f, line_through(t, ql, pl));
      t = pt_add(t, ql);
    }
  }
  // x < 0: invert before the final exponentiation (vertical-line factors
  // vanish under it).
  f = fp12_inv(f);
  return fp12_pow(f, final_exponent());
}

Fp12 Bls12381Group::gt_combine(const Gt& a, const Gt& b) const { return fp12_mul(a, b); }

Fp12 Bls12381Group::gt_pow(const Gt& base, const FieldElement& exp) const {
  return fp12_pow(base, exp.value());
}

Fp12 Bls12381Group::gt_one() const { return fp12_one(); }

bool Bls12381Group::g1_on_curve(const G1& p) const {
  if (p.infinity) return true;
  const Fp rhs = fp_add(fp_mul(fp_sq(p.x), p.x), fp_make(mpz_class(4)));
  return fp_sq(p.y) == rhs;
}

bool Bls12381Group::g2_on_curve(const G2& p) const {
  if (p.infinity) return true;
  const Fp2 b2 = fp2_mul(fp2_xi(), {fp_make(mpz_class(4)), fp_zero()});
  const Fp2 rhs = fp2_add(fp2_mul(fp2_sq(p.x), p.x), b2);
  return fp2_sq(p.y) == rhs;
}

std::vector<uint8_t> Bls12381Group::g1_to_bytes(const G1& p) const {
  std::vector<uint8_t> out;
  out.reserve(g1_byte_size());
  out.push_back(p.infinity ? 0x00 : 0x01);
  if (p.infinity) {
    out.resize(g1_byte_size(), 0);
    return out;
  }
  fp_to_be48(p.x, out);
  fp_to_be48(p.y, out);
  return out;
}

std::vector<uint8_t> Bls12381Group::g2_to_bytes(const G2& p) const {
  std::vector<uint8_t> out;
  out.reserve(g2_byte_size());
  out.push_back(p.infinity ? 0x00 : 0x01);
  if (p.infinity) {
    out.resize(g2_byte_size(), 0);
    return out;
  }
  fp_to_be48(p.x.c0, out);
  fp_to_be48(p.x.c1, out);
  fp_to_be48(p.y.c0, out);
  fp_to_be48(p.y.c1, out);
  return out;
}

G1Affine Bls12381Group::g1_from_bytes(std::span<const uint8_t> data) const {
  if (data.size() != g1_byte_size()) throw std::runtime_error("bls12381: bad G1 length");
  if (data[0] == 0x00) return {};
  if (data[0] != 0x01) throw std::runtime_error("bls12381: bad G1 flag");
  G1Affine p{fp_from_be48(data.subspan(1, 48)), fp_from_be48(data.subspan(49, 48)), false};
  if (!g1_on_curve(p)) throw std::runtime_error("bls12381: G1 point off curve");
  if (!pt_scalar_mul(to_pt(p), scalar_prime()).inf) {
    throw std::runtime_error("bls12381: G1 point outside the prime subgroup");
  }
  return p;
}

G2Affine Bls12381Group::g2_from_bytes(std::span<const uint8_t> data) const {
  if (data.size() != g2_byte_size()) throw std::runtime_error("bls12381: bad G2 length");
  if (data[0] == 0x00) return {};
  if (data[0] != 0x01) throw std::runtime_error("bls12381: bad G2 flag");
  G2Affine p{{fp_from_be48(data.subspan(1, 48)), fp_from_be48(data.subspan(49, 48))},
             {fp_from_be48(data.subspan(97, 48)), fp_from_be48(data.subspan(145, 48))},
             false};
  if (!g2_on_curve(p)) throw std::runtime_error("bls12381: G2 point off curve");
  if (!pt_scalar_mul(to_pt(p), scalar_prime()).inf) {
    throw std::runtime_error("bls12381: G2 point outside the prime subgroup");
  }
  return p;
}

}  // namespace zkfingpt::bls12381
