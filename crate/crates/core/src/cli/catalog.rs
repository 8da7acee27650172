//! Built-in arrangements.

use crate::arrangement::{Arrangement, Hyperplane};
use crate::cyclofield::CycNum;

use super::format::ArrangementFile;

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub key: &'static str,
    pub notes: &'static str,
    /// `(m, note)`: covers `X_m` with a known identification.
    pub annotations: &'static [(u64, &'static str)],
    pub arrangement: Arrangement,
}

impl CatalogEntry {
    pub fn file(&self) -> ArrangementFile {
        ArrangementFile::from_arrangement(self.key, &self.arrangement)
    }

    pub fn annotation(&self, m: u64) -> Option<&'static str> {
        self.annotations.iter().find(|(k, _)| *k == m).map(|(_, s)| *s)
    }
}

fn z3(e: i64) -> CycNum {
    CycNum::zeta_pow(3, e)
}

fn int3(v: i64) -> CycNum {
    CycNum::from_int(3, v)
}

fn plane3(constant: CycNum, coeffs: [CycNum; 2]) -> Hyperplane {
    Hyperplane::new(constant, coeffs.to_vec())
}

fn linear3(coeffs: [CycNum; 3]) -> Hyperplane {
    Hyperplane::new(int3(0), coeffs.to_vec())
}

pub fn selberg() -> Arrangement {
    Arrangement::build(
        2,
        1,
        vec![
            Hyperplane::from_ints(0, &[1, 0]),
            Hyperplane::from_ints(0, &[0, 1]),
            Hyperplane::from_ints(0, &[1, -1]),
            Hyperplane::from_ints(-1, &[1, 0]),
            Hyperplane::from_ints(-1, &[0, 1]),
        ],
    )
    .expect("selberg is essential")
}

/// `xy(y-x)z(z-x-ζ²y)(z+ζy)(z-x)(z+ζ²x+ζy)` over Q(ζ_3).
pub fn maclane() -> Arrangement {
    let (o, l) = (int3(0), int3(1));
    Arrangement::build(
        3,
        3,
        vec![
            linear3([l.clone(), o.clone(), o.clone()]),
            linear3([o.clone(), l.clone(), o.clone()]),
            linear3([-l.clone(), l.clone(), o.clone()]),
            linear3([o.clone(), o.clone(), l.clone()]),
            linear3([-l.clone(), -z3(2), l.clone()]),
            linear3([o.clone(), z3(1), l.clone()]),
            linear3([-l.clone(), o.clone(), l.clone()]),
            linear3([z3(2), z3(1), l]),
        ],
    )
    .expect("maclane is essential")
}

/// [`maclane`] with `x = 1`, in coordinates `(y, z)`.
pub fn maclane_decone() -> Arrangement {
    let (o, l) = (int3(0), int3(1));
    Arrangement::build(
        2,
        3,
        vec![
            plane3(o.clone(), [l.clone(), o.clone()]),
            plane3(-l.clone(), [l.clone(), o.clone()]),
            plane3(o.clone(), [o.clone(), l.clone()]),
            plane3(-l.clone(), [-z3(2), l.clone()]),
            plane3(o.clone(), [z3(1), l.clone()]),
            plane3(-l.clone(), [o.clone(), l.clone()]),
            plane3(z3(2), [z3(1), l]),
        ],
    )
    .expect("maclane decone is essential")
}

/// `x_1 x_2 x_3 Π_{i,j} (x_1 + ζ^i x_2 + ζ^j x_3)` over Q(ζ_3).
pub fn hessian() -> Arrangement {
    let (o, l) = (int3(0), int3(1));
    let mut hs = vec![
        linear3([l.clone(), o.clone(), o.clone()]),
        linear3([o.clone(), l.clone(), o.clone()]),
        linear3([o.clone(), o, l.clone()]),
    ];
    for i in 0..3 {
        for j in 0..3 {
            hs.push(linear3([l.clone(), z3(i), z3(j)]));
        }
    }
    Arrangement::build(3, 3, hs).expect("hessian is essential")
}

/// [`hessian`] with `x_1 = 1`, in coordinates `(x_2, x_3)`.
pub fn hessian_decone() -> Arrangement {
    let (o, l) = (int3(0), int3(1));
    let mut hs = vec![plane3(o.clone(), [l.clone(), o.clone()]), plane3(o.clone(), [o, l.clone()])];
    for i in 0..3 {
        for j in 0..3 {
            hs.push(plane3(l.clone(), [z3(i), z3(j)]));
        }
    }
    Arrangement::build(2, 3, hs).expect("hessian decone is essential")
}

/// `(x³-y³)(x³-z³)(y³-z³)`, central in C³.
pub fn ceva3() -> Arrangement {
    let (o, l) = (int3(0), int3(1));
    let mut hs = Vec::new();
    for (a, b) in [(0usize, 1usize), (0, 2), (1, 2)] {
        for e in 0..3 {
            let mut c = [o.clone(), o.clone(), o.clone()];
            c[a] = l.clone();
            c[b] = -z3(e);
            hs.push(linear3(c));
        }
    }
    Arrangement::build(3, 3, hs).expect("ceva(3) is essential")
}

pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            key: "selberg",
            notes: "Selberg arrangement xy(x-y)(x-1)(y-1) in C^2; a decone of the rank-3 braid arrangement",
            annotations: &[(6, "≅ Milnor fiber of braid arrangement")],
            arrangement: selberg(),
        },
        CatalogEntry {
            key: "maclane",
            notes: "MacLane (8_3) configuration xy(y-x)z(z-x-ζ²y)(z+ζy)(z-x)(z+ζ²x+ζy), central in C^3, ζ = ζ_3",
            annotations: &[],
            arrangement: maclane(),
        },
        CatalogEntry {
            key: "maclane-decone",
            notes: "MacLane arrangement deconed at x",
            annotations: &[(8, "≅ Milnor fiber of MacLane arrangement")],
            arrangement: maclane_decone(),
        },
        CatalogEntry {
            key: "hessian",
            notes: "Hessian configuration x1 x2 x3 Π_{i,j} (x1 + ζ^i x2 + ζ^j x3), central in C^3, ζ = ζ_3",
            annotations: &[],
            arrangement: hessian(),
        },
        CatalogEntry {
            key: "hessian-decone",
            notes: "Hessian arrangement deconed at x1",
            annotations: &[(12, "≅ Milnor fiber of Hessian arrangement")],
            arrangement: hessian_decone(),
        },
        CatalogEntry {
            key: "ceva3",
            notes: "Ceva(3) arrangement (x³-y³)(x³-z³)(y³-z³), central in C^3",
            annotations: &[],
            arrangement: ceva3(),
        },
    ]
}

pub fn lookup(key: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.key == key)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decones_match_central_forms() {
        assert_eq!(maclane().decone(0).unwrap(), maclane_decone());
        assert_eq!(hessian().decone(0).unwrap(), hessian_decone());
    }

    #[test]
    fn sizes() {
        let sizes: Vec<(&str, usize, usize, bool)> = catalog()
            .iter()
            .map(|e| (e.key, e.arrangement.len(), e.arrangement.ambient_dim(), e.arrangement.is_central()))
            .collect();
        assert_eq!(
            sizes,
            vec![
                ("selberg", 5, 2, false),
                ("maclane", 8, 3, true),
                ("maclane-decone", 7, 2, false),
                ("hessian", 12, 3, true),
                ("hessian-decone", 11, 2, false),
                ("ceva3", 9, 3, true),
            ]
        );
    }

    #[test]
    fn lookup_by_key() {
        assert!(lookup("selberg").is_some());
        assert!(lookup("nope").is_none());
        assert_eq!(lookup("selberg").unwrap().annotation(6), Some("≅ Milnor fiber of braid arrangement"));
    }
}
