//! Constructors for the standard small groups used in tests and the CLI corpus.

use crate::group::{Group, PermGroup};
use crate::perm::Perm;

fn from_cycles(name: &str, degree: usize, gens: &[String]) -> Group {
    let gens = gens
        .iter()
        .map(|s| Perm::parse_cycles(s, degree).expect("valid cycle text"))
        .filter(|p| !p.is_identity())
        .collect();
    PermGroup::closure(degree, gens)
        .expect("corpus group within cap")
        .with_name(name)
}

fn from_images(name: &str, gens: Vec<Vec<u32>>) -> Group {
    let degree = gens[0].len();
    let gens = gens
        .into_iter()
        .map(|g| Perm::from_images(g).expect("bijection"))
        .collect();
    PermGroup::closure(degree, gens)
        .expect("corpus group within cap")
        .with_name(name)
}

fn cycle_text(points: impl IntoIterator<Item = usize>) -> String {
    let pts: Vec<String> = points.into_iter().map(|p| p.to_string()).collect();
    format!("({})", pts.join(" "))
}

pub fn trivial() -> Group {
    PermGroup::trivial(1).with_name("trivial")
}

pub fn cyclic(n: usize) -> Group {
    let gens = if n > 1 {
        vec![cycle_text(1..=n)]
    } else {
        vec![]
    };
    from_cycles(&format!("C{n}"), n.max(1), &gens)
}

pub fn symmetric(n: usize) -> Group {
    let mut gens = vec![];
    if n >= 2 {
        gens.push("(1 2)".to_string());
        gens.push(cycle_text(1..=n));
    }
    from_cycles(&format!("S{n}"), n.max(1), &gens)
}

pub fn alternating(n: usize) -> Group {
    let gens: Vec<String> = (3..=n).map(|k| cycle_text([1, 2, k])).collect();
    from_cycles(&format!("A{n}"), n.max(1), &gens)
}

/// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
pub fn dihedral(n: usize) -> Group {
    let rot = cycle_text(1..=n);
    let refl: String = (1..=n / 2)
        .filter(|&i| i != n + 1 - i)
        .map(|i| cycle_text([i, n + 1 - i]))
        .collect();
    from_cycles(&format!("D{n}"), n, &[rot, refl])
}

pub fn klein_four() -> Group {
    from_cycles("C2xC2", 4, &["(1 2)".into(), "(3 4)".into()])
}

pub fn s3_x_c2() -> Group {
    from_cycles(
        "S3xC2",
        5,
        &["(1 2)".into(), "(1 2 3)".into(), "(4 5)".into()],
    )
}

/// Quaternion group in its right regular representation on 8 points.
pub fn quaternion() -> Group {
    // Unit `u ∈ {1,i,j,k}` with sign bit `s`, encoded as `u + 4s`.
    fn mul(a: usize, b: usize) -> usize {
        // Products of basis units: (sign, unit)
        const T: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let (s, u) = T[a % 4][b % 4];
        u + 4 * ((s + a / 4 + b / 4) % 2)
    }
    let right = |g: usize| (0..8).map(|x| mul(x, g) as u32).collect::<Vec<_>>();
    from_images("Q8", vec![right(1), right(2)])
}

/// SL(2,3) acting on the eight nonzero vectors of F_3^2.
pub fn sl23() -> Group {
    let vectors: Vec<(u8, u8)> = (0..3u8)
        .flat_map(|a| (0..3u8).map(move |b| (a, b)))
        .filter(|&v| v != (0, 0))
        .collect();
    let act = |m: [[u8; 2]; 2]| -> Vec<u32> {
        vectors
            .iter()
            .map(|&(x, y)| {
                let w = (
                    (m[0][0] * x + m[0][1] * y) % 3,
                    (m[1][0] * x + m[1][1] * y) % 3,
                );
                vectors.iter().position(|&v| v == w).unwrap() as u32
            })
            .collect()
    };
    from_images(
        "SL(2,3)",
        vec![act([[1, 1], [0, 1]]), act([[1, 0], [1, 1]])],
    )
}

/// Looks up a corpus group by name (`C5`, `S4`, `A5`, `D6`, `Q8`, ...).
pub fn by_name(name: &str) -> Option<Group> {
    let n = name.trim();
    match n {
        "trivial" | "C1" => return Some(trivial()),
        "Q8" => return Some(quaternion()),
        "SL(2,3)" | "SL23" => return Some(sl23()),
        "C2xC2" | "V4" => return Some(klein_four()),
        "S3xC2" => return Some(s3_x_c2()),
        _ => {}
    }
    let (head, tail) = n.split_at(1);
    let k: usize = tail.parse().ok()?;
    match head {
        "C" if k >= 1 => Some(cyclic(k)),
        "S" if k >= 1 => Some(symmetric(k)),
        "A" if k >= 3 => Some(alternating(k)),
        "D" if k >= 3 => Some(dihedral(k)),
        _ => None,
    }
}

/// The standard corpus, in a fixed order.
pub fn standard() -> Vec<Group> {
    let mut v: Vec<Group> = (2..=12).map(cyclic).collect();
    v.extend([
        symmetric(3),
        symmetric(4),
        alternating(4),
        dihedral(4),
        dihedral(6),
        quaternion(),
        klein_four(),
        s3_x_c2(),
        sl23(),
        alternating(5),
    ]);
    v
}
