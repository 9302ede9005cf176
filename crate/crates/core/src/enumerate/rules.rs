use serde::Serialize;

use crate::singular::CyclicQuotient;

/// A condition on `(r, a, e)` imposed by the singularities of `X`. Only the
/// cyclic quotient point is tested with Reid-Tai; the hyperquotient points
/// are encoded as the inequalities below, not derived.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExclusionRule {
    pub id: &'static str,
    pub description: &'static str,
}

pub const RULES: [ExclusionRule; 5] = [
    ExclusionRule {
        id: "wps-terminal",
        description: "when e = ra, X is the weighted projective space P(1,1,a,ra-1); its only \
                      possible singular point 1/(ra-1)(1,1,a) must be terminal",
    },
    ExclusionRule {
        id: "pz-terminal",
        description: "when e < ra, the coordinate point P_z is 1/(ra-1)(1,a,e); it must be \
                      isolated and pass Reid-Tai",
    },
    ExclusionRule {
        id: "a-plus-one",
        description: "accept when a + 1 = 0 mod (ra-1)",
    },
    ExclusionRule {
        id: "e-plus-one",
        description: "accept when e = ra - 2 and 2e <= ra; larger e makes the point P_t a \
                      non-terminal hyperquotient point",
    },
    ExclusionRule {
        id: "a-plus-e",
        description: "accept when e = ra - a - 1 and 2e <= ra; for r = 2 also a <= 3, beyond \
                      which a hyperquotient point fails to be terminal",
    },
];

/// For `e = ra`: `X = P(1,1,a,ra-1)` is terminal.
pub fn wps_terminal(r: u32, a: u32) -> bool {
    let n = r * a - 1;
    n == 1
        || CyclicQuotient::new(n, [1, 1, i64::from(a)])
            .ok()
            .and_then(|p| p.is_terminal().ok())
            .unwrap_or(false)
}

/// Case (ii): ids of the rules a hypersurface triple fails, empty if it
/// is admitted.
pub fn hypersurface_failures(r: u32, a: u32, e: u32) -> Vec<&'static str> {
    let ra = r * a;
    let n = ra - 1;
    let mut failed = Vec::new();
    if n > 1 {
        let p = CyclicQuotient::new(n, [1, i64::from(a), i64::from(e)]).expect("n > 0");
        if !p.is_terminal().unwrap_or(false) {
            failed.push("pz-terminal");
        }
    }
    let r1 = (a + 1) % n == 0;
    let r2 = e + 2 == ra && 2 * e <= ra;
    let r3 = e + a + 1 == ra && 2 * e <= ra && (r != 2 || a <= 3);
    if !(r1 || r2 || r3) {
        failed.extend(["a-plus-one", "e-plus-one", "a-plus-e"]);
    }
    failed
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wps_terminal_matches_inequality() {
        for r in 2..=12 {
            for a in 1..=12 {
                assert_eq!(wps_terminal(r, a), a * (r - 1) <= 2, "({r},{a})");
            }
        }
    }

    #[test]
    fn rule_ids_unique() {
        let mut ids: Vec<_> = RULES.iter().map(|r| r.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), RULES.len());
    }

    #[test]
    fn failures_for_known_triples() {
        assert!(hypersurface_failures(3, 1, 1).is_empty());
        assert_eq!(hypersurface_failures(3, 1, 2), vec!["pz-terminal"]);
        assert!(!hypersurface_failures(5, 1, 1).is_empty());
    }
}
