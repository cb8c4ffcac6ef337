use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sympbranch::exacteval::{eval_poly, random_rational_matrix};
use sympbranch::lattice::elements;
use sympbranch::rational::ratio;
use sympbranch::straighten::{default_weight_base, lattice_weight};
use sympbranch::{ColumnIndex, FormalPolynomial, Monomial};

fn monomial_from(n: usize, picks: &[usize]) -> Monomial {
    let els = elements(n).unwrap();
    Monomial::new(n, picks.iter().map(|&k| els[k % els.len()]).collect()).unwrap()
}

/// Column sizes and entry counts below `n`: together they fix `(D, F)`.
fn content(m: &Monomial) -> (Vec<usize>, Vec<usize>) {
    let n = m.rank();
    let mut sizes: Vec<usize> = m.columns().iter().map(ColumnIndex::size).collect();
    sizes.sort_unstable();
    let mut low = vec![0; n - 1];
    for c in m.columns() {
        for e in c.column_set() {
            if e < n {
                low[e - 1] += 1;
            }
        }
    }
    (sizes, low)
}

fn monomial_strategy() -> impl Strategy<Value = Monomial> {
    (2usize..=5, prop::collection::vec(0usize..64, 0..=6)).prop_map(|(n, picks)| monomial_from(n, &picks))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn output_is_standard_and_preserves_content(m in monomial_strategy()) {
        let out = FormalPolynomial::from_monomial(m.clone()).straighten();
        prop_assert!(out.is_standard());
        for (term, _) in out.terms() {
            prop_assert_eq!(content(term), content(&m));
        }
    }

    #[test]
    fn weight_filtration(m in monomial_strategy()) {
        let base = default_weight_base(m.rank());
        let w = lattice_weight(&m, base).unwrap();
        let p = FormalPolynomial::from_monomial(m.clone());
        let out = p.straighten();
        let hibi = p.hibi_normal_form();
        let mut lowest = FormalPolynomial::zero(m.rank()).unwrap();
        for (term, c) in out.terms() {
            let wt = lattice_weight(term, base).unwrap();
            prop_assert!(wt >= w);
            if wt == w {
                lowest.add_term(term.clone(), c.clone());
            }
        }
        prop_assert_eq!(lowest, hibi);
    }

    #[test]
    fn rewrite_order_does_not_matter(m in monomial_strategy(), seed in any::<u64>()) {
        let p = FormalPolynomial::from_monomial(m);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let shuffled = p.straighten_by(|_, pairs| rng.gen_range(0..pairs.len()));
        let last = p.straighten_by(|_, pairs| pairs.len() - 1);
        prop_assert_eq!(&shuffled, &p.straighten());
        prop_assert_eq!(&last, &p.straighten());
    }

    #[test]
    fn straightening_is_sound_under_evaluation(
        n in 2usize..=4,
        terms in prop::collection::vec((prop::collection::vec(0usize..64, 0..=4), -5i64..=5, 1i64..=3), 1..=3),
        seed in any::<u64>(),
    ) {
        let mut p = FormalPolynomial::zero(n).unwrap();
        for (picks, a, b) in &terms {
            p.add_term(monomial_from(n, picks), ratio(*a, *b));
        }
        let x = random_rational_matrix(2 * n, seed);
        prop_assert_eq!(eval_poly(&p.straighten(), &x), eval_poly(&p, &x));
    }

    #[test]
    fn straightening_is_linear(a in monomial_strategy(), picks in prop::collection::vec(0usize..64, 0..=4), c in -4i64..=4) {
        let n = a.rank();
        let b = monomial_from(n, &picks);
        let pa = FormalPolynomial::from_monomial(a);
        let pb = FormalPolynomial::from_monomial(b);
        let combo = pa.add(&pb.scale(&ratio(c, 1))).unwrap();
        let expected = pa.straighten().add(&pb.straighten().scale(&ratio(c, 1))).unwrap();
        prop_assert_eq!(combo.straighten(), expected);
    }
}

#[test]
fn text_round_trip_of_straightened_output() {
    for n in 2..=4 {
        let els = elements(n).unwrap();
        for a in &els {
            for b in &els {
                let p = FormalPolynomial::from_monomial(Monomial::new(n, vec![*a, *b]).unwrap()).straighten();
                let text = p.to_string();
                assert_eq!(FormalPolynomial::parse(&text, n).unwrap(), p, "{text}");
            }
        }
    }
}
