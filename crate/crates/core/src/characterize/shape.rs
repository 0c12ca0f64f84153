//! Parametric sequence shapes such as `(n-i, k+i, 4^t, 2^{k-t}, 1^{n-2-k})`.
//!
//! A [`Family`] is a list of `value^count` segments whose values and counts are
//! linear in `n` and the named parameters. Matching derives candidate
//! parameters from the sequence, range-checks them, then instantiates the
//! shape and compares it with the sequence term by term.

use std::collections::BTreeMap;

use super::Theorem;

pub type Bindings = BTreeMap<&'static str, i64>;

/// `c + n_coeff * n + sum(coeff * param)`.
#[derive(Debug, Clone, Copy)]
pub struct Lin {
    pub c: i64,
    pub n_coeff: i64,
    pub params: &'static [(&'static str, i64)],
}

impl Lin {
    pub fn eval(&self, n: usize, b: &Bindings) -> Option<i64> {
        let mut acc = self.c + self.n_coeff * n as i64;
        for &(name, coeff) in self.params {
            acc += coeff * b.get(name)?;
        }
        Some(acc)
    }
}

pub const fn lit(c: i64) -> Lin {
    Lin {
        c,
        n_coeff: 0,
        params: &[],
    }
}

/// `n + c`
pub const fn n_plus(c: i64) -> Lin {
    Lin {
        c,
        n_coeff: 1,
        params: &[],
    }
}

pub const fn par(params: &'static [(&'static str, i64)]) -> Lin {
    Lin {
        c: 0,
        n_coeff: 0,
        params,
    }
}

pub const fn lin(c: i64, n_coeff: i64, params: &'static [(&'static str, i64)]) -> Lin {
    Lin { c, n_coeff, params }
}

#[derive(Debug, Clone, Copy)]
pub struct Segment {
    pub value: Lin,
    pub count: Lin,
}

/// Shorthand for a segment `value^count`.
pub const fn seg(value: Lin, count: Lin) -> Segment {
    Segment { value, count }
}

/// A single term `value^1`.
pub const fn one(value: Lin) -> Segment {
    Segment {
        value,
        count: lit(1),
    }
}

pub struct Family {
    pub theorem: Theorem,
    pub condition: u8,
    pub label: &'static str,
    pub segments: &'static [Segment],
    /// Candidate parameters read off the sequence.
    pub derive: fn(&[u32]) -> Vec<Bindings>,
    /// Printed range constraints.
    pub in_range: fn(usize, &Bindings) -> bool,
}

impl Family {
    /// The shape at `n` under `b`, or `None` when a count is negative, a value
    /// is negative, or the total length is not `n`.
    pub fn instantiate(&self, n: usize, b: &Bindings) -> Option<Vec<u32>> {
        let mut out = Vec::with_capacity(n);
        for s in self.segments {
            let value = s.value.eval(n, b)?;
            let count = s.count.eval(n, b)?;
            if value < 0 || count < 0 {
                return None;
            }
            out.extend(std::iter::repeat_n(value as u32, count as usize));
            if out.len() > n {
                return None;
            }
        }
        (out.len() == n).then_some(out)
    }

    /// Every in-range binding whose instantiation equals `terms`.
    pub fn match_terms(&self, terms: &[u32]) -> Vec<Bindings> {
        let n = terms.len();
        let mut out: Vec<Bindings> = Vec::new();
        for b in (self.derive)(terms) {
            if !(self.in_range)(n, &b) {
                continue;
            }
            if self.instantiate(n, &b).as_deref() == Some(terms) && !out.contains(&b) {
                out.push(b);
            }
        }
        out
    }
}

pub fn bind(pairs: &[(&'static str, i64)]) -> Bindings {
    pairs.iter().copied().collect()
}

/// Number of entries equal to `v` at 0-based positions `from..`.
pub fn count_from(terms: &[u32], from: usize, v: u32) -> i64 {
    terms.iter().skip(from).filter(|&&x| x == v).count() as i64
}

pub fn no_params(_: &[u32]) -> Vec<Bindings> {
    vec![Bindings::new()]
}

pub fn always(_: usize, _: &Bindings) -> bool {
    true
}

fn get(b: &Bindings, k: &str) -> i64 {
    b.get(k).copied().unwrap_or(i64::MIN)
}

/// Value of the 1-based term `i`, as `i64`.
fn d(terms: &[u32], i: usize) -> i64 {
    terms.get(i - 1).copied().unwrap_or(0) as i64
}

// ---------------------------------------------------------------------------
// K_{2,3}

pub static K23_EXCEPTIONS: [Family; 5] = [
    entry(
        Theorem::K23,
        3,
        "(3^2,2^4)",
        &[seg(lit(3), lit(2)), seg(lit(2), lit(4))],
    ),
    entry(
        Theorem::K23,
        3,
        "(3^2,2^5)",
        &[seg(lit(3), lit(2)), seg(lit(2), lit(5))],
    ),
    entry(
        Theorem::K23,
        3,
        "(4^3,2^3)",
        &[seg(lit(4), lit(3)), seg(lit(2), lit(3))],
    ),
    entry(
        Theorem::K23,
        3,
        "(n-1,3^5,1^{n-6})",
        &[
            one(n_plus(-1)),
            seg(lit(3), lit(5)),
            seg(lit(1), n_plus(-6)),
        ],
    ),
    entry(
        Theorem::K23,
        3,
        "(n-1,3^6,1^{n-7})",
        &[
            one(n_plus(-1)),
            seg(lit(3), lit(6)),
            seg(lit(1), n_plus(-7)),
        ],
    ),
];

const fn entry(
    theorem: Theorem,
    condition: u8,
    label: &'static str,
    segments: &'static [Segment],
) -> Family {
    Family {
        theorem,
        condition,
        label,
        segments,
        derive: no_params,
        in_range: always,
    }
}

// ---------------------------------------------------------------------------
// K_5 - P_4

pub static K5P4_FAMILY_2: Family = Family {
    theorem: Theorem::K5P4,
    condition: 2,
    label: "(n-1,k,2^t,1^{n-2-t})",
    segments: &[
        one(n_plus(-1)),
        one(par(&[("k", 1)])),
        seg(lit(2), par(&[("t", 1)])),
        seg(lit(1), lin(-2, 1, &[("t", -1)])),
    ],
    derive: |terms| vec![bind(&[("k", d(terms, 2)), ("t", count_from(terms, 2, 2))])],
    in_range: |n, b| {
        let (k, t, n) = (get(b, "k"), get(b, "t"), n as i64);
        n >= 5 && (3..=n - 2).contains(&k) && (3..=n - 2).contains(&t) && (k - t) % 2 != 0
    },
};

pub static K5P4_FAMILY_3: Family = Family {
    theorem: Theorem::K5P4,
    condition: 3,
    label: "(n-k,k+i,2^i,1^{n-i-2})",
    segments: &[
        one(n_plus_par(&[("k", -1)])),
        one(par(&[("k", 1), ("i", 1)])),
        seg(lit(2), par(&[("i", 1)])),
        seg(lit(1), lin(-2, 1, &[("i", -1)])),
    ],
    derive: |terms| {
        let n = terms.len() as i64;
        let k = n - d(terms, 1);
        vec![bind(&[("k", k), ("i", d(terms, 2) - k)])]
    },
    in_range: |n, b| {
        let (k, i, n) = (get(b, "k"), get(b, "i"), n as i64);
        n >= 5 && (1..=(n - 1) / 2 - 1).contains(&k) && (3..=n - 2 * k).contains(&i)
    },
};

const fn n_plus_par(params: &'static [(&'static str, i64)]) -> Lin {
    lin(0, 1, params)
}

pub static K5P4_EXCEPTIONS: [Family; 2] = [
    entry(
        Theorem::K5P4,
        4,
        "(3^2,2^4)",
        &[seg(lit(3), lit(2)), seg(lit(2), lit(4))],
    ),
    entry(
        Theorem::K5P4,
        4,
        "(3^2,2^5)",
        &[seg(lit(3), lit(2)), seg(lit(2), lit(5))],
    ),
];

// ---------------------------------------------------------------------------
// Shared head-term shapes

fn heads(terms: &[u32], count: usize) -> Vec<(&'static str, i64)> {
    const NAMES: [&str; 3] = ["d1", "d2", "d3"];
    (0..count).map(|j| (NAMES[j], d(terms, j + 1))).collect()
}

const TWO_HEADS_3_4: &[Segment] = &[
    one(par(&[("d1", 1)])),
    one(par(&[("d2", 1)])),
    seg(lit(3), lit(4)),
    seg(lit(2), par(&[("t", 1)])),
    seg(lit(1), lin(-6, 1, &[("t", -1)])),
];

fn derive_two_heads_3_4(terms: &[u32]) -> Vec<Bindings> {
    let mut b = heads(terms, 2);
    b.push(("t", count_from(terms, 6, 2)));
    vec![bind(&b)]
}

/// `(d_1, d_2, 3^4, 2^t, 1^{n-6-t})`
pub const fn two_heads_3_4(theorem: Theorem, condition: u8) -> Family {
    Family {
        theorem,
        condition,
        label: "(d1,d2,3^4,2^t,1^{n-6-t})",
        segments: TWO_HEADS_3_4,
        derive: derive_two_heads_3_4,
        in_range: always,
    }
}

// ---------------------------------------------------------------------------
// K_{3,3}

pub static K33_FAMILY_6A: Family = two_heads_3_4(Theorem::K33, 6);

pub static K33_FAMILY_6B: Family = Family {
    theorem: Theorem::K33,
    condition: 6,
    label: "(d1,d2,4^2,3^2,2^t,1^{n-6-t})",
    segments: &[
        one(par(&[("d1", 1)])),
        one(par(&[("d2", 1)])),
        seg(lit(4), lit(2)),
        seg(lit(3), lit(2)),
        seg(lit(2), par(&[("t", 1)])),
        seg(lit(1), lin(-6, 1, &[("t", -1)])),
    ],
    derive: |terms| {
        let mut b = heads(terms, 2);
        b.push(("t", count_from(terms, 6, 2)));
        vec![bind(&b)]
    },
    in_range: always,
};

pub static K33_FAMILY_7: Family = Family {
    theorem: Theorem::K33,
    condition: 7,
    label: "(d1,d2,4,3^4,2^t,1^{n-7-t})",
    segments: &[
        one(par(&[("d1", 1)])),
        one(par(&[("d2", 1)])),
        one(lit(4)),
        seg(lit(3), lit(4)),
        seg(lit(2), par(&[("t", 1)])),
        seg(lit(1), lin(-7, 1, &[("t", -1)])),
    ],
    derive: |terms| {
        let mut b = heads(terms, 2);
        b.push(("t", count_from(terms, 7, 2)));
        vec![bind(&b)]
    },
    in_range: always,
};

/// `(n-i, k+i, 4^t, 2^{k-t}, 1^{n-2-k})` for `t = 5, 6`.
pub static K33_FAMILY_8: Family = Family {
    theorem: Theorem::K33,
    condition: 8,
    label: "(n-i,k+i,4^t,2^{k-t},1^{n-2-k})",
    segments: &[
        one(n_plus_par(&[("i", -1)])),
        one(par(&[("k", 1), ("i", 1)])),
        seg(lit(4), par(&[("t", 1)])),
        seg(lit(2), par(&[("k", 1), ("t", -1)])),
        seg(lit(1), lin(-2, 1, &[("k", -1)])),
    ],
    derive: |terms| {
        let n = terms.len() as i64;
        let i = n - d(terms, 1);
        let k = d(terms, 2) - i;
        [5, 6]
            .into_iter()
            .map(|t| bind(&[("i", i), ("k", k), ("t", t)]))
            .collect()
    },
    in_range: |n, b| {
        let (i, k, t, n) = (get(b, "i"), get(b, "k"), get(b, "t"), n as i64);
        (t == 5 || t == 6) && i >= 1 && i <= (n - k).div_euclid(2) && (t..=n - 2 * i).contains(&k)
    },
};

pub static K33_EXCEPTIONS: [Family; 22] = [
    entry(
        Theorem::K33,
        9,
        "(5^4,3^2,2)",
        &[seg(lit(5), lit(4)), seg(lit(3), lit(2)), one(lit(2))],
    ),
    entry(Theorem::K33, 9, "(4^6)", &[seg(lit(4), lit(6))]),
    entry(
        Theorem::K33,
        9,
        "(3^6,2)",
        &[seg(lit(3), lit(6)), one(lit(2))],
    ),
    entry(
        Theorem::K33,
        9,
        "(6^4,3^4)",
        &[seg(lit(6), lit(4)), seg(lit(3), lit(4))],
    ),
    entry(
        Theorem::K33,
        9,
        "(4^2,3^6)",
        &[seg(lit(4), lit(2)), seg(lit(3), lit(6))],
    ),
    entry(
        Theorem::K33,
        9,
        "(4,3^6,2)",
        &[one(lit(4)), seg(lit(3), lit(6)), one(lit(2))],
    ),
    entry(
        Theorem::K33,
        9,
        "(3^6,2^2)",
        &[seg(lit(3), lit(6)), seg(lit(2), lit(2))],
    ),
    entry(Theorem::K33, 9, "(3^8)", &[seg(lit(3), lit(8))]),
    entry(
        Theorem::K33,
        9,
        "(3^7,1)",
        &[seg(lit(3), lit(7)), one(lit(1))],
    ),
    entry(
        Theorem::K33,
        9,
        "(4,3^8)",
        &[one(lit(4)), seg(lit(3), lit(8))],
    ),
    entry(
        Theorem::K33,
        9,
        "(4,3^7,1)",
        &[one(lit(4)), seg(lit(3), lit(7)), one(lit(1))],
    ),
    entry(
        Theorem::K33,
        9,
        "(3^8,2)",
        &[seg(lit(3), lit(8)), one(lit(2))],
    ),
    entry(
        Theorem::K33,
        9,
        "(3^7,2,1)",
        &[seg(lit(3), lit(7)), one(lit(2)), one(lit(1))],
    ),
    entry(
        Theorem::K33,
        9,
        "(3^9,1)",
        &[seg(lit(3), lit(9)), one(lit(1))],
    ),
    entry(
        Theorem::K33,
        9,
        "(3^8,1^2)",
        &[seg(lit(3), lit(8)), seg(lit(1), lit(2))],
    ),
    entry(
        Theorem::K33,
        9,
        "(n-1,4^2,3^4,1^{n-7})",
        &[
            one(n_plus(-1)),
            seg(lit(4), lit(2)),
            seg(lit(3), lit(4)),
            seg(lit(1), n_plus(-7)),
        ],
    ),
    entry(
        Theorem::K33,
        9,
        "(n-1,4^2,3^5,1^{n-8})",
        &[
            one(n_plus(-1)),
            seg(lit(4), lit(2)),
            seg(lit(3), lit(5)),
            seg(lit(1), n_plus(-8)),
        ],
    ),
    entry(
        Theorem::K33,
        9,
        "(n-1,5^3,3^3,1^{n-7})",
        &[
            one(n_plus(-1)),
            seg(lit(5), lit(3)),
            seg(lit(3), lit(3)),
            seg(lit(1), n_plus(-7)),
        ],
    ),
    entry(
        Theorem::K33,
        9,
        "(n-2,4,3^5,1^{n-7})",
        &[
            one(n_plus(-2)),
            one(lit(4)),
            seg(lit(3), lit(5)),
            seg(lit(1), n_plus(-7)),
        ],
    ),
    entry(
        Theorem::K33,
        9,
        "(n-2,4,3^6,1^{n-8})",
        &[
            one(n_plus(-2)),
            one(lit(4)),
            seg(lit(3), lit(6)),
            seg(lit(1), n_plus(-8)),
        ],
    ),
    entry(
        Theorem::K33,
        9,
        "(n-3,3^6,1^{n-7})",
        &[
            one(n_plus(-3)),
            seg(lit(3), lit(6)),
            seg(lit(1), n_plus(-7)),
        ],
    ),
    entry(
        Theorem::K33,
        9,
        "(n-3,3^7,1^{n-8})",
        &[
            one(n_plus(-3)),
            seg(lit(3), lit(7)),
            seg(lit(1), n_plus(-8)),
        ],
    ),
];

// ---------------------------------------------------------------------------
// K_6 - C_6

pub static K6C6_FAMILY_6: Family = Family {
    theorem: Theorem::K6C6,
    condition: 6,
    label: "(d1,d2,d3,3^k,2^t,1^{n-3-k-t})",
    segments: &[
        one(par(&[("d1", 1)])),
        one(par(&[("d2", 1)])),
        one(par(&[("d3", 1)])),
        seg(lit(3), par(&[("k", 1)])),
        seg(lit(2), par(&[("t", 1)])),
        seg(lit(1), lin(-3, 1, &[("k", -1), ("t", -1)])),
    ],
    derive: |terms| {
        let mut b = heads(terms, 3);
        b.push(("k", count_from(terms, 3, 3)));
        b.push(("t", count_from(terms, 3, 2)));
        vec![bind(&b)]
    },
    in_range: always,
};

pub static K6C6_FAMILY_7: Family = two_heads_3_4(Theorem::K6C6, 7);

/// `(n-i, k, t, 3^t, 2^{k-i-t-1}, 1^{n-2-k+i})`.
pub static K6C6_FAMILY_8: Family = Family {
    theorem: Theorem::K6C6,
    condition: 8,
    label: "(n-i,k,t,3^t,2^{k-i-t-1},1^{n-2-k+i})",
    segments: &[
        one(n_plus_par(&[("i", -1)])),
        one(par(&[("k", 1)])),
        one(par(&[("t", 1)])),
        seg(lit(3), par(&[("t", 1)])),
        seg(lit(2), lin(-1, 0, &[("k", 1), ("i", -1), ("t", -1)])),
        seg(lit(1), lin(-2, 1, &[("k", -1), ("i", 1)])),
    ],
    derive: |terms| {
        let n = terms.len() as i64;
        vec![bind(&[
            ("i", n - d(terms, 1)),
            ("k", d(terms, 2)),
            ("t", d(terms, 3)),
        ])]
    },
    in_range: |n, b| {
        let (i, k, t, n) = (get(b, "i"), get(b, "k"), get(b, "t"), n as i64);
        t >= 4 && i >= 1 && i <= (n - t - 1).div_euclid(2) && (i + t + 1..=n - i).contains(&k)
    },
};

pub static K6C6_EXCEPTIONS: [Family; 18] = [
    entry(
        Theorem::K6C6,
        9,
        "(3^6,2)",
        &[seg(lit(3), lit(6)), one(lit(2))],
    ),
    entry(
        Theorem::K6C6,
        9,
        "(4^2,3^6)",
        &[seg(lit(4), lit(2)), seg(lit(3), lit(6))],
    ),
    entry(
        Theorem::K6C6,
        9,
        "(4,3^6,2)",
        &[one(lit(4)), seg(lit(3), lit(6)), one(lit(2))],
    ),
    entry(
        Theorem::K6C6,
        9,
        "(3^6,2^2)",
        &[seg(lit(3), lit(6)), seg(lit(2), lit(2))],
    ),
    entry(Theorem::K6C6, 9, "(3^8)", &[seg(lit(3), lit(8))]),
    entry(
        Theorem::K6C6,
        9,
        "(3^7,1)",
        &[seg(lit(3), lit(7)), one(lit(1))],
    ),
    entry(
        Theorem::K6C6,
        9,
        "(4,3^8)",
        &[one(lit(4)), seg(lit(3), lit(8))],
    ),
    entry(
        Theorem::K6C6,
        9,
        "(4,3^7,1)",
        &[one(lit(4)), seg(lit(3), lit(7)), one(lit(1))],
    ),
    entry(
        Theorem::K6C6,
        9,
        "(3^8,2)",
        &[seg(lit(3), lit(8)), one(lit(2))],
    ),
    entry(
        Theorem::K6C6,
        9,
        "(3^7,2,1)",
        &[seg(lit(3), lit(7)), one(lit(2)), one(lit(1))],
    ),
    entry(
        Theorem::K6C6,
        9,
        "(3^9,1)",
        &[seg(lit(3), lit(9)), one(lit(1))],
    ),
    entry(
        Theorem::K6C6,
        9,
        "(3^8,1^2)",
        &[seg(lit(3), lit(8)), seg(lit(1), lit(2))],
    ),
    entry(
        Theorem::K6C6,
        9,
        "(n-1,4^2,3^4,1^{n-7})",
        &[
            one(n_plus(-1)),
            seg(lit(4), lit(2)),
            seg(lit(3), lit(4)),
            seg(lit(1), n_plus(-7)),
        ],
    ),
    entry(
        Theorem::K6C6,
        9,
        "(n-1,4^2,3^5,1^{n-8})",
        &[
            one(n_plus(-1)),
            seg(lit(4), lit(2)),
            seg(lit(3), lit(5)),
            seg(lit(1), n_plus(-8)),
        ],
    ),
    entry(
        Theorem::K6C6,
        9,
        "(n-2,4,3^5,1^{n-7})",
        &[
            one(n_plus(-2)),
            one(lit(4)),
            seg(lit(3), lit(5)),
            seg(lit(1), n_plus(-7)),
        ],
    ),
    entry(
        Theorem::K6C6,
        9,
        "(n-2,4,3^6,1^{n-8})",
        &[
            one(n_plus(-2)),
            one(lit(4)),
            seg(lit(3), lit(6)),
            seg(lit(1), n_plus(-8)),
        ],
    ),
    entry(
        Theorem::K6C6,
        9,
        "(n-3,3^6,1^{n-7})",
        &[
            one(n_plus(-3)),
            seg(lit(3), lit(6)),
            seg(lit(1), n_plus(-7)),
        ],
    ),
    entry(
        Theorem::K6C6,
        9,
        "(n-3,3^7,1^{n-8})",
        &[
            one(n_plus(-3)),
            seg(lit(3), lit(7)),
            seg(lit(1), n_plus(-8)),
        ],
    ),
];

impl Family {
    /// True when the shape depends on `n` (an `n`-parametric list entry).
    pub fn is_n_parametric(&self) -> bool {
        self.segments
            .iter()
            .any(|s| s.value.n_coeff != 0 || s.count.n_coeff != 0)
    }

    /// The smallest `count` lengths at which a parameter-free entry
    /// instantiates, searching `n` in `1..=limit`.
    pub fn smallest_instances(&self, count: usize, limit: usize) -> Vec<Vec<u32>> {
        (1..=limit)
            .filter_map(|n| self.instantiate(n, &Bindings::new()))
            .filter(|t| t.windows(2).all(|w| w[0] >= w[1]))
            .take(count)
            .collect()
    }
}
