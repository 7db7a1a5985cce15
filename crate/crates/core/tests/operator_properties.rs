use std::collections::BTreeMap;

use ltype::exact::{int, ratio};
use ltype::{CanonicalOperator, OpAtom, OpWord, Poly, RatFn, Rational};
use num_traits::Zero;
use proptest::prelude::*;

/// A function `e^{t x} Π (x - c)^{γ_c} f(x)` with rational `f`, fractional
/// `γ_c` kept apart from `f`.
#[derive(Clone)]
struct Weighted {
    exp: Rational,
    powers: BTreeMap<Rational, Rational>,
    f: RatFn,
}

/// Applies a word to a polynomial atom by atom, working on functions rather
/// than operators. Returns `None` if a weight survives.
fn apply_word_to_function(word: &OpWord, p: &Poly) -> Option<RatFn> {
    let mut g = Weighted { exp: Rational::zero(), powers: BTreeMap::new(), f: RatFn::from(p.clone()) };
    for atom in word.atoms().iter().rev() {
        match atom {
            OpAtom::Derive => {
                let mut log_d = RatFn::constant(g.exp.clone());
                for (c, e) in &g.powers {
                    log_d = &log_d + &RatFn::linear_power(c, -1).scale(e);
                }
                g.f = &g.f.derive() + &(&log_d * &g.f);
            }
            OpAtom::MulPoly(q) => g.f = g.f.mul_poly(q),
            OpAtom::MulExp(s) => g.exp += s,
            OpAtom::MulPow { center, exponent } => {
                let total = g.powers.remove(center).unwrap_or_else(Rational::zero) + exponent;
                let whole = total.floor();
                let frac = &total - &whole;
                let m: i64 = whole.to_integer().try_into().unwrap();
                g.f = &g.f * &RatFn::linear_power(center, m);
                if !frac.is_zero() {
                    g.powers.insert(center.clone(), frac);
                }
            }
            OpAtom::Apply(op) => {
                if !g.exp.is_zero() || !g.powers.is_empty() {
                    return None;
                }
                g.f = apply_to_ratfn(op, &g.f);
            }
        }
    }
    (g.exp.is_zero() && g.powers.is_empty()).then_some(g.f)
}

/// `Σ c_i f^{(i)}` by repeated differentiation.
fn apply_to_ratfn(op: &CanonicalOperator, f: &RatFn) -> RatFn {
    let mut acc = RatFn::zero();
    let mut d = f.clone();
    let mut order = 0;
    for (i, c) in op.terms() {
        while order < i {
            d = d.derive();
            order += 1;
        }
        acc = &acc + &(c * &d);
    }
    acc
}

fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-4i64..=4, 0..4).prop_map(|c| Poly::from_ints(&c))
}

fn center() -> impl Strategy<Value = Rational> {
    prop::sample::select(vec![int(0), int(1), int(-1), ratio(1, 2)])
}

fn atom() -> impl Strategy<Value = OpAtom> {
    prop_oneof![
        3 => Just(OpAtom::Derive),
        2 => small_poly().prop_map(OpAtom::MulPoly),
        2 => (center(), -2i64..=2, 1i64..=3).prop_map(|(c, n, d)| OpAtom::MulPow { center: c, exponent: ratio(n, d) }),
        1 => prop::sample::select(vec![int(1), int(-1), ratio(1, 2), int(2)]).prop_map(OpAtom::MulExp),
    ]
}

/// Random words whose exponential and fractional power weights cancel overall.
fn balanced_word() -> impl Strategy<Value = OpWord> {
    (prop::collection::vec(atom(), 0..7), any::<prop::sample::Index>()).prop_map(|(atoms, idx)| {
        let mut exp = Rational::zero();
        let mut powers: BTreeMap<Rational, Rational> = BTreeMap::new();
        for a in &atoms {
            match a {
                OpAtom::MulExp(s) => exp += s,
                OpAtom::MulPow { center, exponent } => {
                    *powers.entry(center.clone()).or_insert_with(Rational::zero) += exponent
                }
                _ => {}
            }
        }
        let mut fixes = Vec::new();
        if !exp.is_zero() {
            fixes.push(OpAtom::MulExp(-exp));
        }
        for (c, e) in powers {
            let frac = &e - e.floor();
            if !frac.is_zero() {
                fixes.push(OpAtom::MulPow { center: c, exponent: -frac });
            }
        }
        let mut atoms = atoms;
        let at = idx.index(atoms.len() + 1);
        for (k, f) in fixes.into_iter().enumerate() {
            atoms.insert(at + k, f);
        }
        OpWord::from_atoms(atoms)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn normalized_word_acts_like_the_word(w in balanced_word(), p in small_poly()) {
        let op = w.normalize().unwrap();
        let direct = apply_word_to_function(&w, &p).unwrap();
        prop_assert_eq!(op.apply_to_poly(&p), direct);
    }

    #[test]
    fn normalization_respects_concatenation(a in balanced_word(), b in balanced_word()) {
        let joined = a.clone().then(&b).normalize().unwrap();
        let composed = a.normalize().unwrap().compose(&b.normalize().unwrap());
        prop_assert_eq!(joined, composed);
    }

    #[test]
    fn apply_atom_matches_inlined_word(a in balanced_word(), b in balanced_word(), c in balanced_word()) {
        let inlined = a.clone().then(&b).then(&c).normalize().unwrap();
        let nested = a.apply(b.normalize().unwrap()).then(&c).normalize().unwrap();
        prop_assert_eq!(inlined, nested);
    }

    #[test]
    fn composition_acts_as_sequential_application(a in balanced_word(), b in balanced_word(), p in small_poly()) {
        let (a, b) = (a.normalize().unwrap(), b.normalize().unwrap());
        let inner = b.apply_to_poly(&p);
        prop_assert_eq!(a.compose(&b).apply_to_poly(&p), apply_to_ratfn(&a, &inner));
    }

    #[test]
    fn composition_is_associative(a in balanced_word(), b in balanced_word(), c in balanced_word()) {
        let (a, b, c) = (a.normalize().unwrap(), b.normalize().unwrap(), c.normalize().unwrap());
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }
}
