mod support;

use std::collections::HashSet;

use kaplansky_core::group::parse_group_spec;
use kaplansky_core::lca::{
    check_equivariance, lca_from_matrix, CellularAutomaton, GeneralCA, LinearCA,
};
use kaplansky_core::{Elem, FiniteField, Group, GroupRingMatrix, Subset};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use support::all_vectors;

const GROUPS: &[&str] = &[
    "cyclic:3",
    "cyclic:5",
    "product(cyclic:2,cyclic:2)",
    "symmetric:3",
    "dihedral:4",
];

fn group(spec: &str) -> Group {
    parse_group_spec(spec).unwrap()
}

fn elems(v: &[u32]) -> Vec<Elem> {
    v.iter().map(|&c| Elem(c)).collect()
}

fn raw(v: &[Elem]) -> Vec<u32> {
    v.iter().map(|c| c.0).collect()
}

/// τ(x)(g)_a = Σ_{s,b} M_ab(s) x(gs)_b over Z/p, from the dense matrix layout.
fn apply_oracle(g: &Group, p: u32, d: usize, m: &[u32], x: &[u32]) -> Vec<u32> {
    let n = g.order();
    let mut out = vec![0u32; n * d];
    for h in 0..n {
        for a in 0..d {
            let mut acc = 0u64;
            for s in 0..n {
                for b in 0..d {
                    acc += m[(a * d + b) * n + s] as u64 * x[g.mul(h, s) * d + b] as u64;
                }
            }
            out[h * d + a] = (acc % p as u64) as u32;
        }
    }
    out
}

fn mat_vec(t: &[Vec<Elem>], v: &[u32], p: u32) -> Vec<u32> {
    t.iter()
        .map(|row| {
            (row.iter()
                .zip(v)
                .map(|(c, x)| c.0 as u64 * *x as u64)
                .sum::<u64>()
                % p as u64) as u32
        })
        .collect()
}

proptest! {
    #[test]
    fn apply_matches_oracle_and_global_matrix(
        gi in 0..GROUPS.len(),
        p in prop::sample::select(vec![2u32, 3, 5]),
        d in 1usize..=2,
        seed in any::<u64>(),
    ) {
        let g = group(GROUPS[gi]);
        let f = FiniteField::new(p, 1).unwrap();
        let n = g.order();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m: Vec<u32> = (0..d * d * n).map(|_| rng.gen_range(0..p)).collect();
        let tau = lca_from_matrix(&GroupRingMatrix::from_dense(&g, &f, d, &elems(&m)));
        let t = tau.global_matrix().to_rows();
        let mut samples = Vec::new();
        for _ in 0..10 {
            let x: Vec<u32> = (0..n * d).map(|_| rng.gen_range(0..p)).collect();
            let cx = tau.configuration_from_flat(&elems(&x)).unwrap();
            let y = raw(&LinearCA::flatten(&tau.apply(&cx).unwrap()));
            prop_assert_eq!(&y, &apply_oracle(&g, p, d, &m, &x));
            prop_assert_eq!(&y, &mat_vec(&t, &x, p));
            samples.push(cx);
        }
        prop_assert!(check_equivariance(&tau, &samples).unwrap());
    }

    #[test]
    fn global_matrix_is_multiplicative(
        gi in 0..GROUPS.len(),
        d in 1usize..=2,
        seed in any::<u64>(),
    ) {
        let g = group(GROUPS[gi]);
        let f = FiniteField::new(3, 1).unwrap();
        let n = g.order();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut random = || {
            let v: Vec<u32> = (0..d * d * n).map(|_| rng.gen_range(0..3)).collect();
            GroupRingMatrix::from_dense(&g, &f, d, &elems(&v))
        };
        let (a, b) = (random(), random());
        let ab = lca_from_matrix(&a.mul(&b).unwrap()).global_matrix();
        let ta = lca_from_matrix(&a).global_matrix();
        let tb = lca_from_matrix(&b).global_matrix();
        prop_assert_eq!(ab, ta.mul(&tb, &f).unwrap());
    }

    #[test]
    fn output_at_g_depends_only_on_g_times_memory(
        gi in 0..GROUPS.len(),
        seed in any::<u64>(),
    ) {
        let g = group(GROUPS[gi]);
        let n = g.order();
        let f = FiniteField::new(2, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mem: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
        let memory = Subset::new(&g, if mem.is_empty() { vec![0] } else { mem }).unwrap();
        let coeffs = memory
            .elements()
            .iter()
            .map(|_| kaplansky_core::linalg::Matrix::from_rows(&[vec![Elem(1)]]).unwrap())
            .collect();
        let tau = LinearCA::new(&f, 1, memory.clone(), coeffs).unwrap();
        let x: Vec<u32> = (0..n).map(|_| rng.gen_range(0..2)).collect();
        let h = rng.gen_range(0..n);
        let window: HashSet<usize> = memory.elements().iter().map(|&s| g.mul(h, s)).collect();
        // Flip every coordinate outside the window.
        let y: Vec<u32> = (0..n).map(|k| if window.contains(&k) { x[k] } else { 1 - x[k] }).collect();
        let tx = tau.apply(&tau.configuration_from_flat(&elems(&x)).unwrap()).unwrap();
        let ty = tau.apply(&tau.configuration_from_flat(&elems(&y)).unwrap()).unwrap();
        prop_assert_eq!(tx.at(h), ty.at(h));
    }
}

#[test]
fn rank_verdict_matches_image_count() {
    let cases: &[(&str, u32, usize)] = &[
        ("cyclic:3", 2, 1),
        ("cyclic:4", 2, 1),
        ("cyclic:2", 2, 2),
        ("cyclic:3", 3, 1),
        ("symmetric:3", 2, 1),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for &(spec, p, d) in cases {
        let g = group(spec);
        let f = FiniteField::new(p, 1).unwrap();
        let n = g.order();
        let mut seen = [false; 2];
        for _ in 0..40 {
            let m: Vec<u32> = (0..d * d * n).map(|_| rng.gen_range(0..p)).collect();
            let tau = lca_from_matrix(&GroupRingMatrix::from_dense(&g, &f, d, &elems(&m)));
            let images: HashSet<Vec<u32>> = all_vectors(p, n * d)
                .map(|x| apply_oracle(&g, p, d, &m, &x))
                .collect();
            let bijective = images.len() as u64 == (p as u64).pow((n * d) as u32);
            assert_eq!(
                tau.is_injective(),
                bijective,
                "{spec} GF({p}) d={d} M={m:?}"
            );
            assert_eq!(tau.is_surjective(), bijective);
            seen[bijective as usize] = true;
        }
        assert!(seen[0] && seen[1], "{spec}: sample hit only one verdict");
    }
}

#[test]
fn xor_rule_agrees_with_its_linear_automaton() {
    for spec in ["cyclic:4", "cyclic:5", "symmetric:3"] {
        let g = group(spec);
        let f = FiniteField::new(2, 1).unwrap();
        let n = g.order();
        let memory = Subset::new(&g, [0, 1]).unwrap();
        let rule = GeneralCA::new(
            vec!["0".into(), "1".into()],
            memory.clone(),
            vec![0, 1, 1, 0],
        )
        .unwrap();
        let one = kaplansky_core::linalg::Matrix::from_rows(&[vec![Elem(1)]]).unwrap();
        let tau = LinearCA::new(&f, 1, memory, vec![one.clone(), one]).unwrap();
        for index in 0..1u64 << n {
            let x = rule.configuration(index);
            let flat: Vec<Elem> = x.values().iter().map(|&v| Elem(v as u32)).collect();
            let lin = tau
                .apply(&tau.configuration_from_flat(&flat).unwrap())
                .unwrap();
            let gen = rule.apply(&x).unwrap();
            let gen: Vec<Elem> = gen.values().iter().map(|&v| Elem(v as u32)).collect();
            assert_eq!(LinearCA::flatten(&lin), gen, "{spec} index {index}");
        }
        let report = rule.analyze(1 << 20).unwrap();
        assert_eq!(report.injective(), tau.is_injective(), "{spec}");
        assert_eq!(report.surjective(), tau.is_surjective(), "{spec}");
        assert!(rule
            .check_injective_implies_surjective(1 << 20)
            .unwrap()
            .passes());
    }
}

#[test]
fn configuration_indices_round_trip() {
    let g = group("dihedral:3");
    let memory = Subset::new(&g, [0, 2]).unwrap();
    let table = (0..9).map(|i| i % 3).collect();
    let rule = GeneralCA::new(vec!["a".into(), "b".into(), "c".into()], memory, table).unwrap();
    let total = rule.configurations(1 << 20).unwrap();
    assert_eq!(total, 3u64.pow(6));
    for i in (0..total).step_by(17) {
        assert_eq!(rule.index_of(&rule.configuration(i)), i);
    }
}
