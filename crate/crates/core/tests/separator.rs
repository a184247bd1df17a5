mod common;

use transreach::gen::{generate, GenSpec, RadiusLaw};
use transreach::separator::{build_separator_oracle, disk_separator, RepChoice, SeparatorConfig};
use transreach::PointSet;

use common::{disks_meet, Reference};

fn instance(psi: f64, side: f64, seed: u64) -> PointSet {
    generate(&GenSpec::new(
        2,
        180,
        side,
        RadiusLaw::Uniform { lo: 1.0, hi: psi },
        seed,
    ))
    .unwrap()
}

#[test]
fn both_representative_rules_are_exact() {
    for rule in [RepChoice::Smallest, RepChoice::Largest] {
        let cfg = SeparatorConfig {
            representative: rule,
            ..SeparatorConfig::default()
        };
        for seed in 0..6 {
            let ps = instance(4.0, 22.0, 50 + seed);
            let o = build_separator_oracle(&ps, cfg).unwrap();
            let r = Reference::new(&ps);
            for s in ps.ids() {
                for t in ps.ids() {
                    assert_eq!(
                        o.query(s, t).unwrap(),
                        r.reaches(s, t),
                        "{rule:?} seed {seed}: {s} -> {t}"
                    );
                }
            }
        }
    }
}

#[test]
fn witnesses_are_genuine() {
    let ps = instance(8.0, 30.0, 3);
    let o = build_separator_oracle(&ps, SeparatorConfig::default()).unwrap();
    let r = Reference::new(&ps);
    for s in ps.ids() {
        for t in ps.ids() {
            if let Some((node, via)) = o.witness(s, t).unwrap() {
                assert!((node as usize) < o.nodes().len());
                assert!(r.reaches(s, via) && r.reaches(via, t));
            }
        }
    }
}

#[test]
fn separation_keeps_sides_apart() {
    for seed in 0..20 {
        let ps = instance(2.5, 18.0, 200 + seed);
        let ids: Vec<u32> = ps.ids().collect();
        let sep = disk_separator(&ps, &ids, 0.75).unwrap();
        assert_eq!(sep.a.len() + sep.b.len() + sep.s.len(), ids.len());
        for &a in &sep.a {
            for &b in &sep.b {
                assert!(!disks_meet(&ps, a, b), "seed {seed}: {a} and {b} meet");
            }
        }
    }
}

#[test]
fn representatives_live_in_their_cell() {
    let ps = instance(3.0, 20.0, 8);
    let o = build_separator_oracle(&ps, SeparatorConfig::default()).unwrap();
    let r = Reference::new(&ps);
    for v in ps.ids() {
        let rep = o.representative(v);
        assert!(
            r.reaches(v, rep) && r.reaches(rep, v),
            "{v} and its representative {rep} differ"
        );
    }
}

#[test]
fn tree_shape_is_consistent() {
    let ps = instance(16.0, 50.0, 1);
    let o = build_separator_oracle(&ps, SeparatorConfig::default()).unwrap();
    let nodes = o.nodes();
    let mut absorbed = vec![0; ps.len()];
    for node in nodes {
        for &c in &node.children {
            assert_eq!(nodes[c as usize].parent, Some(node.id));
            assert_eq!(nodes[c as usize].depth, node.depth + 1);
        }
        assert!(!node.leaf || node.children.is_empty());
        for &v in &node.absorbed {
            absorbed[v as usize] += 1;
        }
    }
    assert!(absorbed.iter().all(|&k| k == 1));
    let st = o.stats();
    assert_eq!(st.nodes, nodes.len());
    assert!(st.leaves <= st.nodes && st.max_beta_hat.is_finite());
}
