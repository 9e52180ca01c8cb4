//! Displayed expansions from the literature, instantiated at concrete values
//! and compared term by term with the engine. Shared by the golden and
//! acceptance targets.

#![allow(dead_code)]

use packmat::exactlin::{int, rat};
use packmat::hopfpack::{quasi_shuffle, second_coproduct, shuffle};
use packmat::morphisms::{k_xy, kappa_xy, theta_q};
use packmat::nsymqsym::{perm_shuffle, star_product};
use packmat::{
    Composition, HPack2, Limits, LinComb, PackedMatrix, Permutation, QSymElem, Rational,
    RationalPair,
};

/// One displayed formula checked at one instantiation.
pub struct Golden {
    pub name: String,
    pub got: String,
    pub want: String,
    pub ok: bool,
}

fn golden<K: Ord + Clone>(name: String, got: &LinComb<K>, want: &LinComb<K>) -> Golden
where
    LinComb<K>: std::fmt::Display,
{
    Golden {
        name,
        got: got.to_string(),
        want: want.to_string(),
        ok: got == want,
    }
}

pub fn pm(rows: &[&[u64]]) -> PackedMatrix {
    PackedMatrix::from_rows(rows).expect("packed literal")
}

pub fn comp(parts: &[u64]) -> Composition {
    Composition::new(parts.to_vec()).expect("composition literal")
}

pub fn perm(word: &[usize]) -> Permutation {
    Permutation::new(word.to_vec()).expect("permutation literal")
}

/// Sums `(coefficient, key)` pairs, merging repeated keys.
pub fn sum<K: Ord + Clone>(terms: impl IntoIterator<Item = (Rational, K)>) -> LinComb<K> {
    let mut out = LinComb::zero();
    for (c, k) in terms {
        out.add_term(k, c);
    }
    out
}

fn ones<K: Ord + Clone>(keys: impl IntoIterator<Item = K>) -> LinComb<K> {
    sum(keys.into_iter().map(|k| (int(1), k)))
}

/// `(a,b,c,d)` instantiations used for every symbolic display.
pub const VALUES: [[u64; 4]; 2] = [[1, 2, 3, 4], [1, 1, 1, 1]];

/// Parameter pairs for the displays in `x` and `y`.
pub fn params() -> Vec<RationalPair> {
    vec![
        RationalPair::new(int(1), int(1)),
        RationalPair::new(int(2), int(3)),
        RationalPair::new(rat(-1, 2), rat(5, 3)),
        RationalPair::new(int(0), rat(7, 4)),
    ]
}

fn qsh_ab([a, b, ..]: [u64; 4]) -> Golden {
    let want = ones([
        pm(&[&[a, 0], &[0, b]]),
        pm(&[&[0, b], &[a, 0]]),
        pm(&[&[b, 0], &[0, a]]),
        pm(&[&[0, a], &[b, 0]]),
        pm(&[&[a, b]]),
        pm(&[&[a], &[b]]),
        pm(&[&[b, a]]),
        pm(&[&[b], &[a]]),
        pm(&[&[a + b]]),
    ]);
    let got = quasi_shuffle(&pm(&[&[a]]), &pm(&[&[b]]));
    golden(format!("(a)⧆(b), a={a} b={b}"), &got, &want)
}

fn qsh_a_bc([a, b, c, _]: [u64; 4]) -> Golden {
    let want = ones([
        pm(&[&[a, 0], &[0, b], &[0, c]]),
        pm(&[&[0, b], &[a, 0], &[0, c]]),
        pm(&[&[0, b], &[0, c], &[a, 0]]),
        pm(&[&[a, b], &[0, c]]),
        pm(&[&[0, b], &[a, c]]),
        pm(&[&[0, a], &[b, 0], &[c, 0]]),
        pm(&[&[b, 0], &[0, a], &[c, 0]]),
        pm(&[&[b, 0], &[c, 0], &[0, a]]),
        pm(&[&[b, a], &[c, 0]]),
        pm(&[&[b, 0], &[c, a]]),
        pm(&[&[a], &[b], &[c]]),
        pm(&[&[b], &[a], &[c]]),
        pm(&[&[b], &[c], &[a]]),
        pm(&[&[a + b], &[c]]),
        pm(&[&[b], &[a + c]]),
    ]);
    let got = quasi_shuffle(&pm(&[&[a]]), &pm(&[&[b], &[c]]));
    golden(format!("(a)⧆(b;c), a={a} b={b} c={c}"), &got, &want)
}

fn shuffle_transposition() -> Golden {
    let want = sum([
        (int(1), pm(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]])),
        (int(2), pm(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]])),
        (int(3), pm(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])),
        (int(2), pm(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]])),
        (int(1), pm(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]])),
    ]);
    let got = shuffle(&pm(&[&[1]]), &pm(&[&[0, 1], &[1, 0]]));
    golden("(1)⧧(0 1;1 0)".into(), &got, &want)
}

fn theta_ab([a, b, ..]: [u64; 4]) -> Golden {
    let want = ones([
        pm(&[&[a, b]]),
        pm(&[&[a], &[b]]),
        pm(&[&[a, 0], &[0, b]]),
        pm(&[&[0, a], &[b, 0]]),
    ]);
    let got = theta_q(&comp(&[a, b]), &Limits::default()).expect("within limits");
    golden(format!("θ(ab), a={a} b={b}"), &got, &want)
}

fn theta_abc([a, b, c, _]: [u64; 4]) -> Golden {
    // The published list repeats (0 a;b 0;c 0) and omits (0 a;b 0;0 c).
    let want = ones([
        pm(&[&[a, b, c]]),
        pm(&[&[a, 0], &[b, c]]),
        pm(&[&[0, a], &[b, c]]),
        pm(&[&[a, 0, 0], &[0, b, c]]),
        pm(&[&[0, a, 0], &[b, 0, c]]),
        pm(&[&[0, 0, a], &[b, c, 0]]),
        pm(&[&[a, b], &[c, 0]]),
        pm(&[&[a, b], &[0, c]]),
        pm(&[&[0, a, b], &[c, 0, 0]]),
        pm(&[&[a, 0, b], &[0, c, 0]]),
        pm(&[&[a, b, 0], &[0, 0, c]]),
        pm(&[&[a, 0], &[0, b], &[c, 0]]),
        pm(&[&[a, 0], &[0, b], &[0, c]]),
        pm(&[&[a, 0], &[b, 0], &[0, c]]),
        pm(&[&[0, a], &[b, 0], &[c, 0]]),
        pm(&[&[0, a], &[b, 0], &[0, c]]),
        pm(&[&[0, a], &[0, b], &[c, 0]]),
        pm(&[&[a], &[b], &[c]]),
        pm(&[&[a, 0, 0], &[0, b, 0], &[0, 0, c]]),
        pm(&[&[a, 0, 0], &[0, 0, b], &[0, c, 0]]),
        pm(&[&[0, a, 0], &[b, 0, 0], &[0, 0, c]]),
        pm(&[&[0, a, 0], &[0, 0, b], &[c, 0, 0]]),
        pm(&[&[0, 0, a], &[b, 0, 0], &[0, c, 0]]),
        pm(&[&[0, 0, a], &[0, b, 0], &[c, 0, 0]]),
    ]);
    let got = theta_q(&comp(&[a, b, c]), &Limits::default()).expect("within limits");
    golden(format!("θ(abc), a={a} b={b} c={c}"), &got, &want)
}

fn half(v: Rational) -> Rational {
    v / int(2)
}

fn k_xy_two(p: &RationalPair) -> Golden {
    let (x, y) = (&p.x, &p.y);
    let one = int(1);
    let xy = x * y;
    let quarter = x * (x - &one) * y * (y - &one) / int(4);
    let want = sum([
        (xy.clone(), pm(&[&[2]])),
        (half(&xy * (y - &one)), pm(&[&[1, 1]])),
        (half(x * (x - &one) * y), pm(&[&[1], &[1]])),
        (quarter.clone(), pm(&[&[1, 0], &[0, 1]])),
        (quarter, pm(&[&[0, 1], &[1, 0]])),
    ]);
    let got = k_xy(p, &comp(&[2]), &Limits::default()).expect("within limits");
    golden(format!("K_xy((2)), x={x} y={y}"), &got, &want)
}

fn kappa_small(p: &RationalPair, [a, b, ..]: [u64; 4]) -> Vec<Golden> {
    let (x, y) = (&p.x, &p.y);
    let one = int(1);
    let xy = x * y;
    let quarter = x * (x - &one) * y * (y - &one) / int(4);
    let cases: Vec<(&str, PackedMatrix, QSymElem)> = vec![
        ("(a)", pm(&[&[a]]), sum([(xy.clone(), comp(&[a]))])),
        (
            "(a b)",
            pm(&[&[a, b]]),
            sum([(half(&xy * (y - &one)), comp(&[a + b]))]),
        ),
        (
            "(a;b)",
            pm(&[&[a], &[b]]),
            sum([(half(x * (x - &one) * y), comp(&[a + b]))]),
        ),
        (
            "(0 a;b 0)",
            pm(&[&[0, a], &[b, 0]]),
            sum([(quarter.clone(), comp(&[a + b]))]),
        ),
        (
            "(a 0;0 b)",
            pm(&[&[a, 0], &[0, b]]),
            sum([(quarter, comp(&[a + b])), (&xy * &xy, comp(&[a, b]))]),
        ),
    ];
    cases
        .into_iter()
        .map(|(label, m, want)| {
            golden(
                format!("κ_xy{label}, x={x} y={y} a={a} b={b}"),
                &kappa_xy(p, &m),
                &want,
            )
        })
        .collect()
}

fn tensor_terms(pairs: Vec<(PackedMatrix, PackedMatrix)>) -> HPack2 {
    ones(pairs)
}

fn delta_a([a, ..]: [u64; 4]) -> Golden {
    let m = pm(&[&[a]]);
    let want = tensor_terms(vec![(m.clone(), m.clone())]);
    golden(format!("δ((a)), a={a}"), &second_coproduct(&m), &want)
}

fn delta_row([a, b, ..]: [u64; 4]) -> Golden {
    let m = pm(&[&[a, b]]);
    let want = tensor_terms(vec![
        (pm(&[&[a + b]]), m.clone()),
        (m.clone(), m.clone()),
        (m.clone(), pm(&[&[b, a]])),
        (m.clone(), pm(&[&[a + b]])),
    ]);
    golden(
        format!("δ((a b)), a={a} b={b}"),
        &second_coproduct(&m),
        &want,
    )
}

fn delta_col([a, b, ..]: [u64; 4]) -> Golden {
    let m = pm(&[&[a], &[b]]);
    let want = tensor_terms(vec![
        (pm(&[&[a + b]]), m.clone()),
        (m.clone(), m.clone()),
        (m.clone(), pm(&[&[b], &[a]])),
        (m.clone(), pm(&[&[a + b]])),
    ]);
    golden(
        format!("δ((a;b)), a={a} b={b}"),
        &second_coproduct(&m),
        &want,
    )
}

fn delta_square([a, b, c, d]: [u64; 4]) -> Golden {
    let m = pm(&[&[a, b], &[c, d]]);
    let col_sums = pm(&[&[a + c, b + d]]);
    let row_sums = pm(&[&[a + b], &[c + d]]);
    let mut pairs = vec![
        (pm(&[&[a + b + c + d]]), m.clone()),
        (col_sums.clone(), m.clone()),
        (col_sums.clone(), pm(&[&[b, a], &[d, c]])),
        (col_sums.clone(), row_sums.clone()),
        (row_sums.clone(), m.clone()),
        (row_sums.clone(), pm(&[&[c, d], &[a, b]])),
        (row_sums, col_sums),
    ];
    for right in [
        m.clone(),
        pm(&[&[c, d], &[a, b]]),
        pm(&[&[a + c, b + d]]),
        pm(&[&[b, a], &[d, c]]),
        pm(&[&[d, c], &[b, a]]),
        pm(&[&[b + d, a + c]]),
        pm(&[&[a + b], &[c + d]]),
        pm(&[&[c + d], &[a + b]]),
        pm(&[&[a + b + c + d]]),
    ] {
        pairs.push((m.clone(), right));
    }
    golden(
        format!("δ((a b;c d)), a={a} b={b} c={c} d={d}"),
        &second_coproduct(&m),
        &tensor_terms(pairs),
    )
}

/// Every golden example except the permutation products.
pub fn golden_examples() -> Vec<Golden> {
    let mut out = Vec::new();
    for v in VALUES {
        out.push(qsh_ab(v));
        out.push(qsh_a_bc(v));
        out.push(theta_ab(v));
        out.push(theta_abc(v));
        out.push(delta_a(v));
        out.push(delta_row(v));
        out.push(delta_col(v));
        out.push(delta_square(v));
        for p in params() {
            out.extend(kappa_small(&p, v));
        }
    }
    out.push(shuffle_transposition());
    for p in params() {
        out.push(k_xy_two(&p));
    }
    out
}

/// `(1)⧧(21)` and `(1)★(21)` in one-line notation.
pub fn permutation_examples() -> Vec<Golden> {
    let (one, swap) = (perm(&[1]), perm(&[2, 1]));
    let want_shuffle = sum([
        (int(1), perm(&[1, 3, 2])),
        (int(2), perm(&[3, 1, 2])),
        (int(3), perm(&[3, 2, 1])),
        (int(2), perm(&[2, 3, 1])),
        (int(1), perm(&[2, 1, 3])),
    ]);
    let want_star = ones([perm(&[1, 3, 2]), perm(&[2, 1, 3]), perm(&[3, 2, 1])]);
    vec![
        golden("(1)⧧(21)".into(), &perm_shuffle(&one, &swap), &want_shuffle),
        golden("(1)★(21)".into(), &star_product(&one, &swap), &want_star),
    ]
}
