use serde::Serialize;

use super::transition::TransitionMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Primitivity {
    pub primitive: bool,
    /// Smallest `m` with an all-positive `m`-th power, when primitive.
    pub exponent: Option<usize>,
}

/// Wielandt's bound on the primitivity exponent of an `s × s` matrix.
pub fn wielandt_bound(s: usize) -> usize {
    if s <= 1 {
        1
    } else {
        s * s - 2 * s + 2
    }
}

pub fn check_primitive(t: &TransitionMatrix) -> Primitivity {
    check_primitive_pattern(&t.pattern(), t.size())
}

/// Primitivity of a nonnegative matrix given its row-major nonzero pattern.
pub fn check_primitive_pattern(pattern: &[bool], size: usize) -> Primitivity {
    assert_eq!(pattern.len(), size * size, "pattern is not square");
    let not_primitive = Primitivity {
        primitive: false,
        exponent: None,
    };
    if size == 0 {
        return not_primitive;
    }

    let mut power = pattern.to_vec();
    for m in 1..=wielandt_bound(size) {
        if power.iter().all(|&b| b) {
            return Primitivity {
                primitive: true,
                exponent: Some(m),
            };
        }
        let next = bool_mul(&power, pattern, size);
        if next == power {
            // Powers have stabilized short of all-positive.
            return not_primitive;
        }
        power = next;
    }
    not_primitive
}

fn bool_mul(a: &[bool], b: &[bool], s: usize) -> Vec<bool> {
    let mut out = vec![false; s * s];
    for i in 0..s {
        for k in 0..s {
            if !a[i * s + k] {
                continue;
            }
            for j in 0..s {
                out[i * s + j] |= b[k * s + j];
            }
        }
    }
    out
}
