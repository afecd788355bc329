//! Weyl groupoid of a bicharacter: Cartan entries, reflections, exploration
//! of the object set, real roots and root-system axioms.

mod explore;
mod object;
mod verify;

pub use explore::{
    apply_reflection, cartan_from_roots, explore, AtlasStatus, ExploreConfig, GroupoidAtlas, RootSet,
};
pub use object::{cartan_entry, determinant, reflect_parity, GroupoidObject};
pub use verify::{verify_reflection_identities, verify_root_system, ReflectionReport, RootSystemReport, Violation};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("Cartan entry a_{}{} is undefined", .i + 1, .j + 1)]
    UndefinedCartan { i: usize, j: usize },
    #[error("base has determinant {0}, expected ±1")]
    NotUnimodular(i64),
    #[error("atlas is incomplete")]
    Incomplete,
    #[error("no object with index {0}")]
    UnknownObject(usize),
}

/// Formats a root as `a1+2a2+a3`.
pub fn format_root(r: &[i64]) -> String {
    let mut s = String::new();
    for (i, c) in r.iter().enumerate() {
        if *c == 0 {
            continue;
        }
        if !s.is_empty() || *c < 0 {
            s.push(if *c < 0 { '-' } else { '+' });
        }
        if c.abs() != 1 {
            s.push_str(&c.abs().to_string());
        }
        s.push_str(&format!("a{}", i + 1));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// One line per positive root, sorted by height then lexicographically.
pub fn export_roots(roots: &[Vec<i64>]) -> String {
    let mut sorted: Vec<&Vec<i64>> = roots.iter().collect();
    sorted.sort_by_key(|r| (r.iter().sum::<i64>(), (*r).clone()));
    sorted.iter().map(|r| format!("{}\n", format_root(r))).collect()
}

pub fn export_atlas(atlas: &GroupoidAtlas) -> String {
    let l = atlas.seed.ambient();
    let mut s = format!("objects {}\nstatus {:?}\n", atlas.objects.len(), atlas.status);
    for (x, o) in atlas.objects.iter().enumerate() {
        let word: Vec<String> = atlas.paths[x].iter().map(|i| (i + 1).to_string()).collect();
        s.push_str(&format!("object {x} path [{}]\n", word.join(" ")));
        for row in o.q.entries() {
            let lits: Vec<String> = row.iter().map(|q| q.to_literal(l)).collect();
            s.push_str(&format!("  {}\n", lits.join(" ")));
        }
        if let Some(p) = &o.parity {
            let ps: Vec<String> = p.iter().map(u8::to_string).collect();
            s.push_str(&format!("  parity {}\n", ps.join(" ")));
        }
        if let Ok(pos) = atlas.positive_roots(x) {
            let rs: Vec<String> = export_roots(&pos).lines().map(str::to_string).collect();
            s.push_str(&format!("  roots {}: {}\n", rs.len(), rs.join(" ")));
        }
    }
    for (a, i, b) in &atlas.morphisms {
        s.push_str(&format!("morphism {a} -{}-> {b}\n", i + 1));
    }
    s
}

pub fn atlas_to_dot(atlas: &GroupoidAtlas) -> String {
    let mut s = String::from("graph weyl {\n");
    for x in 0..atlas.objects.len() {
        s.push_str(&format!("  x{x};\n"));
    }
    for (a, i, b) in &atlas.morphisms {
        if a <= b {
            s.push_str(&format!("  x{a} -- x{b} [label=\"{}\"];\n", i + 1));
        }
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::BraidingMatrix;
    use crate::exec::Exec;
    use crate::scalars::UnityScalar;

    fn super_a2() -> BraidingMatrix {
        BraidingMatrix::from_exponents(10, &[vec![5, 8], vec![0, 2]]).unwrap()
    }

    #[test]
    fn rank_one() {
        let b = BraidingMatrix::new(vec![vec![UnityScalar::root(3, 1)]]).unwrap();
        let a = explore(&b, None, &ExploreConfig::default());
        assert_eq!(a.objects.len(), 1);
        assert!(a.status.is_complete());
        assert_eq!(a.positive_roots(0).unwrap(), vec![vec![1]]);
        assert!(verify_root_system(&a).unwrap().passed());
    }

    #[test]
    fn super_a2_roots() {
        // q11 = -1, q12 q21 = q^-1, q22 = q with q = ζ_5
        let a = explore(&super_a2(), None, &ExploreConfig::default());
        assert!(a.status.is_complete(), "{:?}", a.status);
        for x in 0..a.objects.len() {
            assert_eq!(a.positive_roots(x).unwrap(), vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        }
        assert!(verify_root_system(&a).unwrap().passed());
        assert!(verify_reflection_identities(&a).passed());
    }

    #[test]
    fn cartan_from_roots_examples() {
        let a2: RootSet = [vec![1, 0], vec![0, 1], vec![1, 1]].into_iter().collect();
        assert_eq!(cartan_from_roots(&a2, 0, 1), -1);
        let b2: RootSet = [vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]].into_iter().collect();
        assert_eq!(cartan_from_roots(&b2, 0, 1), -2);
        assert_eq!(cartan_from_roots(&b2, 1, 0), -1);
        let disc: RootSet = [vec![1, 0], vec![0, 1]].into_iter().collect();
        assert_eq!(cartan_from_roots(&disc, 0, 1), 0);
    }

    #[test]
    fn mutilated_roots_fail_axiom_two() {
        let mut a = explore(&super_a2(), None, &ExploreConfig::default());
        let roots = a.roots.as_mut().unwrap();
        roots[0].remove(&vec![1, 1]);
        let rep = verify_root_system(&a).unwrap();
        assert!(rep.violations.iter().any(|v| matches!(v, Violation::Axiom2 { .. })));
    }

    #[test]
    fn sequential_matches_parallel() {
        // −1 —q⁻¹— −1 —q— q⁻¹ at q = ζ_5
        let b = BraidingMatrix::from_exponents(30, &[vec![15, 24, 0], vec![0, 15, 6], vec![0, 0, 24]]).unwrap();
        let cfg = ExploreConfig { exec: Exec::Sequential, ..Default::default() };
        let s = explore(&b, None, &cfg);
        let p = explore(&b, None, &ExploreConfig { exec: Exec::Parallel, ..cfg });
        assert!(s.status.is_complete());
        assert_eq!(s.positive_roots(0).unwrap().len(), 6);
        assert_eq!(s, p);
        assert_eq!(export_atlas(&s), export_atlas(&p));
    }

    #[test]
    fn object_cap() {
        let cfg = ExploreConfig { object_cap: 1, ..Default::default() };
        let a = explore(&super_a2(), None, &cfg);
        assert_eq!(a.status, AtlasStatus::ObjectCapExceeded);
        assert!(a.positive_roots(0).is_err());
    }

    #[test]
    fn infinite_root_system_hits_cap() {
        // affine-like: q11 = q22 = q generic with q12 q21 = q^-4
        let q = UnityScalar::generic("q");
        let b = BraidingMatrix::new(vec![vec![q.clone(), q.pow(-4)], vec![UnityScalar::one(1), q.clone()]]).unwrap();
        let cfg = ExploreConfig { root_cap: 50, ..Default::default() };
        let a = explore(&b, None, &cfg);
        assert_eq!(a.status, AtlasStatus::RootCapExceeded);
    }

    #[test]
    fn root_formatting() {
        assert_eq!(format_root(&[1, 2, 0, 1]), "a1+2a2+a4");
        assert_eq!(format_root(&[-1, 0]), "-a1");
    }
}
