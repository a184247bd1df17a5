mod common;

use transreach::gen::{generate, GenSpec, RadiusLaw};
use transreach::sample::{
    build_sample_oracle, build_sample_oracle_with, choose_alpha, SampleOptions, Witness,
};
use transreach::PointSet;

use common::{hops_from, Reference};

fn instance(seed: u64) -> PointSet {
    generate(&GenSpec::new(
        2,
        220,
        40.0,
        RadiusLaw::Uniform { lo: 1.0, hi: 8.0 },
        seed,
    ))
    .unwrap()
}

#[test]
fn never_claims_a_false_path() {
    for seed in 0..5 {
        let ps = instance(seed);
        let r = Reference::new(&ps);
        let opts = SampleOptions {
            alpha: Some(0.3),
            ..SampleOptions::seeded(seed)
        };
        let o = build_sample_oracle_with(&ps, opts).unwrap();
        for s in ps.ids() {
            for t in ps.ids() {
                match o.witness(s, t).unwrap() {
                    None => {}
                    Some(Witness::Identical) => assert_eq!(s, t),
                    Some(Witness::Sample(x)) => assert!(r.reaches(s, x) && r.reaches(x, t)),
                    Some(Witness::Cell { rep, .. }) => {
                        assert!(r.reaches(s, rep) && r.reaches(rep, t))
                    }
                }
            }
        }
    }
}

#[test]
fn short_paths_need_no_sample() {
    for seed in 0..5 {
        let ps = instance(10 + seed);
        let r = Reference::new(&ps);
        let opts = SampleOptions {
            force_empty_sample: true,
            ..SampleOptions::seeded(seed)
        };
        let o = build_sample_oracle_with(&ps, opts).unwrap();
        let bound = o.short_path_bound();
        for s in ps.ids() {
            for (t, h) in hops_from(&r.adj, s).into_iter().enumerate() {
                if h.is_some_and(|h| (h as f64) < bound) {
                    assert!(
                        o.query(s, t as u32).unwrap(),
                        "seed {seed}: {s} -> {t} in {h:?} hops"
                    );
                }
            }
        }
    }
}

#[test]
fn full_sample_is_exact() {
    let ps = instance(77);
    let r = Reference::new(&ps);
    let o = build_sample_oracle(&ps, 5).unwrap();
    // At this size the automatic exponent samples every vertex.
    assert!(choose_alpha(ps.len(), ps.psi()) > 0.5);
    assert_eq!(o.sample().len(), ps.len());
    for s in ps.ids() {
        for t in ps.ids() {
            assert_eq!(o.query(s, t).unwrap(), r.reaches(s, t));
        }
    }
}

#[test]
fn same_seed_same_oracle() {
    let ps = instance(3);
    let opts = SampleOptions {
        alpha: Some(0.3),
        ..SampleOptions::seeded(42)
    };
    let a = build_sample_oracle_with(&ps, opts).unwrap();
    let b = build_sample_oracle_with(&ps, opts).unwrap();
    assert_eq!(a.sample(), b.sample());
    for s in ps.ids() {
        for t in ps.ids() {
            assert_eq!(a.witness(s, t).unwrap(), b.witness(s, t).unwrap());
        }
    }
    let other = build_sample_oracle_with(&ps, SampleOptions { seed: 43, ..opts }).unwrap();
    assert_ne!(a.sample(), other.sample());
}
