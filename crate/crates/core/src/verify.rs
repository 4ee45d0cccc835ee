//! Reproducible verification suites: `published` recomputes every published
//! number, `properties` checks structural identities on seeded random input.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chartables::{
    build_abelian_table, build_dihedral_table, build_symmetric_table, critical_group,
    critical_group_order, ctilde, cyclic_in_dihedral_fusion, abelian_subgroup_fusion, is_faithful,
    repeated_value_subgroups, res_map_on_critical_groups, restrict_rep, s6_outer_automorphism,
    twist, twist_map_on_critical_groups, CharacterTable, RepVector,
};
use crate::cyclotomic::CyclotomicInt;
use crate::error::{Error, Result};
use crate::linalg::{
    char_poly, minors_gcd, smith_normal_form, snf_from_eigenvalues, IntMatrix, IntPoly,
};
use crate::posets::{
    alpha_values, delta_p, down_matrix, path_count, poly_operator_matrix, rank_basis, rank_size,
    up_matrix, word_operator_matrix, Letter, UDWord, WordPolynomial,
};
use crate::sandpile::{
    cayley_covering, cayley_graph, graph_critical_group, laplacian, spanning_tree_count, Digraph,
};
use crate::towers::{
    check_conjecture_56, factorial, gen_perm_rep_critical_group, n_minus_two_closed_form,
    ones_count, structure_bounds, tower_critical_group, unitriangular_submatrix, Prediction,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationResult {
    pub name: String,
    /// Topic the check belongs to, e.g. `s4` or `conjecture`.
    pub group: String,
    /// Where the expected value comes from.
    pub anchor: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    /// Report-only checks never affect the exit code.
    pub asserted: bool,
}

impl VerificationResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// 0 when every asserted check passes, 3 if one errored, else 1.
pub fn exit_code(results: &[VerificationResult]) -> i32 {
    let asserted = || results.iter().filter(|r| r.asserted);
    if asserted().any(|r| r.status == Status::Error) {
        3
    } else if asserted().any(|r| r.status == Status::Fail) {
        1
    } else {
        0
    }
}

struct Suite {
    group: &'static str,
    out: Vec<VerificationResult>,
}

impl Suite {
    fn new() -> Self {
        Suite {
            group: "",
            out: Vec::new(),
        }
    }

    fn group(&mut self, g: &'static str) -> &mut Self {
        self.group = g;
        self
    }

    fn push(&mut self, name: String, anchor: &str, asserted: bool, r: Result<(String, String)>) {
        let (expected, computed, status) = match r {
            Ok((e, c)) => {
                let s = if e == c { Status::Pass } else { Status::Fail };
                (e, c, s)
            }
            Err(e) => (String::new(), e.to_string(), Status::Error),
        };
        self.out.push(VerificationResult {
            name,
            group: self.group.to_string(),
            anchor: anchor.to_string(),
            expected,
            computed,
            status,
            asserted,
        });
    }

    fn check(&mut self, name: impl Into<String>, anchor: &str, f: impl FnOnce() -> Result<(String, String)>) {
        self.push(name.into(), anchor, true, f());
    }

    fn report(&mut self, name: impl Into<String>, anchor: &str, f: impl FnOnce() -> Result<(String, String)>) {
        self.push(name.into(), anchor, false, f());
    }

    /// One result for a family of cases; `computed` names the first failure.
    fn property<I>(&mut self, name: &str, anchor: &str, cases: I)
    where
        I: IntoIterator<Item = Result<Option<String>>>,
    {
        let mut n = 0usize;
        let mut failure = None;
        for case in cases {
            n += 1;
            match case {
                Ok(None) => continue,
                Ok(Some(msg)) => failure = Some(Ok(format!("case {n}: {msg}"))),
                Err(e) => failure = Some(Err(e)),
            }
            break;
        }
        let res = match failure {
            None => Ok((format!("{n} cases hold"), format!("{n} cases hold"))),
            Some(Ok(msg)) => Ok(("all cases hold".into(), msg)),
            Some(Err(e)) => Err(e),
        };
        self.push(name.to_string(), anchor, true, res);
    }

    fn finish(mut self) -> Vec<VerificationResult> {
        self.out.sort_by(|a, b| (&a.group, &a.name).cmp(&(&b.group, &b.name)));
        self.out
    }
}

fn show<T: ToString>(x: T) -> String {
    x.to_string()
}

fn ints(v: &[BigInt]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn word(r: usize, s: &str) -> Result<WordPolynomial> {
    WordPolynomial::from_word(&s.parse::<UDWord>()?, r)
}

/// A uniformly shuffled word with `k` of each letter.
pub fn random_balanced_word<R: Rng>(rng: &mut R, k: usize) -> UDWord {
    let mut letters = vec![Letter::U; k];
    letters.extend(vec![Letter::D; k]);
    letters.shuffle(rng);
    UDWord::new(letters)
}

const S4_CTILDE: [[i64; 5]; 5] = [
    [3, -1, 0, 0, 0],
    [-1, 2, -1, -1, 0],
    [0, -1, 3, -1, 0],
    [0, -1, -1, 2, -1],
    [0, 0, 0, -1, 3],
];

const UUDD_R2N3: [[i64; 10]; 10] = [
    [1, 2, 1, 2, 2, 1, 1, 0, 0, 0],
    [2, 4, 2, 4, 4, 2, 2, 0, 0, 0],
    [1, 2, 1, 2, 2, 1, 1, 0, 0, 0],
    [2, 4, 2, 5, 5, 4, 4, 1, 2, 1],
    [2, 4, 2, 5, 5, 4, 4, 1, 2, 1],
    [1, 2, 1, 4, 4, 5, 5, 2, 4, 2],
    [1, 2, 1, 4, 4, 5, 5, 2, 4, 2],
    [0, 0, 0, 1, 1, 2, 2, 1, 2, 1],
    [0, 0, 0, 2, 2, 4, 4, 2, 4, 2],
    [0, 0, 0, 1, 1, 2, 2, 1, 2, 1],
];

const UD_R2N3: [[i64; 10]; 10] = [
    [1, 1, 0, 1, 0, 0, 0, 0, 0, 0],
    [1, 2, 1, 1, 1, 0, 0, 0, 0, 0],
    [0, 1, 1, 0, 1, 0, 0, 0, 0, 0],
    [1, 1, 0, 2, 1, 1, 1, 0, 0, 0],
    [0, 1, 1, 1, 2, 1, 1, 0, 0, 0],
    [0, 0, 0, 1, 1, 2, 1, 1, 1, 0],
    [0, 0, 0, 1, 1, 1, 2, 0, 1, 1],
    [0, 0, 0, 0, 0, 1, 0, 1, 1, 0],
    [0, 0, 0, 0, 0, 1, 1, 1, 2, 1],
    [0, 0, 0, 0, 0, 0, 1, 0, 1, 1],
];

fn matrix_of<const N: usize>(rows: &[[i64; N]]) -> IntMatrix {
    IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

/// Published values: small representation examples, the closed form for
/// `V(UD)_n`, ones-counts, and the concluding conjecture.
pub fn published_suite(seed: u64) -> Vec<VerificationResult> {
    let mut s = Suite::new();
    representation_examples(&mut s);
    tower_examples(&mut s, seed);
    conjecture_checks(&mut s);
    s.finish()
}

fn representation_examples(s: &mut Suite) {
    const S4: &str = "S4 permutation representation";
    s.group("s4");
    let s4 = build_symmetric_table(4);
    let perm = |t: &CharacterTable| RepVector::from_names(t, &["4", "3,1"]);
    s.check("s4.ctilde", S4, || {
        let t = s4.as_ref().map_err(clone_err)?;
        Ok((show(matrix_of(&S4_CTILDE).to_json()), show(ctilde(t, &perm(t)?)?.to_json())))
    });
    s.check("s4.snf", S4, || {
        let t = s4.as_ref().map_err(clone_err)?;
        let mut d = smith_normal_form(&ctilde(t, &perm(t)?)?).diagonal;
        d.sort();
        Ok(("0 1 1 1 4".into(), ints(&d)))
    });
    s.check("s4.group", S4, || {
        let t = s4.as_ref().map_err(clone_err)?;
        Ok(("Z/4".into(), show(critical_group(t, &perm(t)?)?)))
    });
    s.check("s4.order_formula", S4, || {
        let t = s4.as_ref().map_err(clone_err)?;
        Ok(("4".into(), show(critical_group_order(t, &perm(t)?)?)))
    });
    s.check("s4.repeated_values", S4, || {
        let t = s4.as_ref().map_err(clone_err)?;
        Ok(("(Z/4)^1".into(), subgroup_list(&repeated_value_subgroups(t, &perm(t)?)?)))
    });

    const D5: &str = "D5 restricted to C5";
    s.group("d5");
    let d5 = || -> Result<_> {
        let g = build_dihedral_table(5)?;
        let h = build_abelian_table(&[5])?;
        let f = cyclic_in_dihedral_fusion(&g, &h)?;
        let v = RepVector::from_names(&g, &["psi1", "sign"])?;
        Ok((g, h, f, v))
    };
    s.check("d5.group", D5, || {
        let (g, _, _, v) = d5()?;
        Ok(("Z/2".into(), show(critical_group(&g, &v)?)))
    });
    s.check("d5.restricted_group", D5, || {
        let (g, h, f, v) = d5()?;
        Ok(("Z/5".into(), show(critical_group(&h, &restrict_rep(&g, &h, &f, &v)?)?)))
    });
    s.check("d5.res_map_surjective", D5, || {
        let (g, h, f, v) = d5()?;
        Ok(("false".into(), show(res_map_on_critical_groups(&g, &h, &f, &v)?.surjective)))
    });

    const S6: &str = "S6 outer automorphism";
    s.group("s6");
    let s6 = build_symmetric_table(6);
    for (a, b, want) in [
        ("5,1", "2,2,2", "Z/6 ⊕ Z/6 ⊕ Z/120"),
        ("2,1,1,1,1", "3,3", "Z/24 ⊕ Z/480"),
        ("4,1,1", "3,1,1,1", "Z/3 ⊕ Z/90 ⊕ Z/47520"),
    ] {
        for name in [a, b] {
            s.check(format!("s6.K({name})"), S6, || {
                let t = s6.as_ref().map_err(clone_err)?;
                Ok((want.into(), show(critical_group(t, &RepVector::from_names(t, &[name])?)?)))
            });
        }
        s.check(format!("s6.twist({a})"), S6, || {
            let t = s6.as_ref().map_err(clone_err)?;
            let sigma = s6_outer_automorphism(t)?;
            let v = RepVector::from_names(t, &[a])?;
            let map = twist_map_on_critical_groups(t, &v, &sigma)?;
            Ok((
                format!("{b} isomorphism"),
                format!(
                    "{} {}",
                    twist_name(t, &twist(t, &v, &sigma)?),
                    if map.is_isomorphism() { "isomorphism" } else { "not an isomorphism" }
                ),
            ))
        });
    }

    const CAY: &str = "Cayley graph of the dual of Z6";
    s.group("cayley");
    let z6 = || -> Result<_> {
        let g = build_abelian_table(&[6])?;
        let v = RepVector::from_names(&g, &["chi1", "chi3"])?;
        Ok((g, v))
    };
    s.check("cayley.z6.laplacian", CAY, || {
        let (g, v) = z6()?;
        Ok((ctilde(&g, &v)?.to_json(), laplacian(&cayley_graph(&g, &v)?).to_json()))
    });
    s.check("cayley.z6.group", CAY, || {
        let (g, v) = z6()?;
        Ok((
            show(critical_group(&g, &v)?),
            show(graph_critical_group(&cayley_graph(&g, &v)?, None)?),
        ))
    });
    s.check("cayley.z6_to_z2.covering", CAY, || {
        let (g, v) = z6()?;
        let h = build_abelian_table(&[2])?;
        let f = abelian_subgroup_fusion(&g, &[6], &h, &[2], &[vec![3]])?;
        let (cov, map) = cayley_covering(&g, &h, &f, &v)?;
        let mut fib = [0; 2];
        cov.vertex_map.iter().for_each(|&w| fib[w] += 1);
        Ok((
            "fibres [3, 3], surjective".into(),
            format!("fibres {fib:?}, {}", if map.surjective { "surjective" } else { "not surjective" }),
        ))
    });
}

fn clone_err(e: &Error) -> Error {
    Error::Internal(e.to_string())
}

fn twist_name(t: &CharacterTable, v: &RepVector) -> String {
    let names: Vec<&str> = v
        .0
        .iter()
        .enumerate()
        .flat_map(|(i, &m)| std::iter::repeat(t.irreps()[i].as_str()).take(m.max(0) as usize))
        .collect();
    names.join("+")
}

fn subgroup_list(v: &[(BigInt, usize)]) -> String {
    v.iter().map(|(d, k)| format!("(Z/{d})^{k}")).collect::<Vec<_>>().join(" ⊕ ")
}

fn tower_examples(s: &mut Suite, seed: u64) {
    const GP: &str = "closed form for the generalized permutation representation";
    s.group("gen-perm");
    for (r, nmax) in [(1, 7), (2, 5), (3, 4)] {
        for n in 1..=nmax {
            s.check(format!("gen_perm.r{r}.n{n}"), GP, || {
                Ok((
                    show(gen_perm_rep_critical_group(r, n)),
                    show(tower_critical_group(&word(r, "UD")?, n)?),
                ))
            });
        }
    }
    s.check("gen_perm.r1.n4", "S4 permutation representation", || {
        Ok(("Z/4".into(), show(gen_perm_rep_critical_group(1, 4))))
    });

    const STRUCT: &str = "order and subgroup structure of K(V(f)_n)";
    s.group("structure");
    for (w, n, want) in [("UD", 4, "4"), ("UUDD", 5, "336000"), ("UUUDDD", 5, "349920000")] {
        s.check(format!("structure.{w}.n{n}.order"), STRUCT, || {
            Ok((want.into(), show(&structure_bounds(&word(1, w)?, n)?.order.0)))
        });
        s.check(format!("structure.{w}.n{n}.snf_order"), STRUCT, || {
            let g = tower_critical_group(&word(1, w)?, n)?;
            Ok((want.into(), show(g.order().unwrap_or_default())))
        });
    }

    const ONES: &str = "ones(w) = |(Y^r)_{n-k}|";
    const UKDK: &str = "ones(U^kD^k) = |(Y^r)_{n-k}| for every r";
    const UDUD: &str = "operator matrices for UDUD at r = 2, n = 3";
    s.group("ones");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for r in [2usize, 3] {
        for n in [2usize, 3, 4] {
            let words: Vec<UDWord> = (0..25)
                .map(|_| {
                    let k = rng.gen_range(1..=n);
                    random_balanced_word(&mut rng, k)
                })
                .collect();
            s.check(format!("ones.random.r{r}.n{n}"), ONES, || {
                for w in &words {
                    let rep = ones_count(r, w, n)?;
                    let want = rank_size(r, (n - rep.k) as i64);
                    if rep.ones_count != want {
                        return Ok(("25 words match".into(), format!("{w}: {} ≠ {want}", rep.ones_count)));
                    }
                }
                Ok(("25 words match".into(), "25 words match".into()))
            });
        }
    }
    for n in 1..=7 {
        for k in 1..=n {
            s.check(format!("ones.ukdk.r1.n{n}.k{k}"), UKDK, || {
                let rep = ones_count(1, &UDWord::up_down_power(k), n)?;
                Ok((show(rank_size(1, (n - k) as i64)), show(rep.ones_count)))
            });
        }
    }
    s.check("ones.udud_r2n3.count", UDUD, || {
        Ok(("2".into(), show(ones_count(2, &"UDUD".parse()?, 3)?.ones_count)))
    });
    s.check("ones.udud_r2n3.M2", UDUD, || {
        Ok((matrix_of(&UUDD_R2N3).to_json(), word_operator_matrix(&"UUDD".parse()?, 2, 3)?.to_json()))
    });
    s.check("ones.udud_r2n3.M1", UDUD, || {
        Ok((matrix_of(&UD_R2N3).to_json(), word_operator_matrix(&"UD".parse()?, 2, 3)?.to_json()))
    });
    s.check("ones.udud_r2n3.normal_form", UDUD, || {
        Ok(("U^2D^2 + 2UD".into(), show(word(2, "UDUD")?)))
    });
    s.check("ones.udud_r2n3.witness_k2", UDUD, || {
        let u = unitriangular_submatrix(2, 3, 2)?;
        Ok(("[0, 3] [6, 9] true".into(), format!("{:?} {:?} {}", u.rows, u.cols, u.verified)))
    });
    s.check("ones.udud_r2n3.witness_k1", UDUD, || {
        let u = unitriangular_submatrix(2, 3, 1)?;
        Ok((
            "[0, 1, 3, 5, 6] [3, 4, 6, 8, 9] true".into(),
            format!("{:?} {:?} {}", u.rows, u.cols, u.verified),
        ))
    });

    const R1: &str = "r = 1 counterexample (UD)^2 at n = 7";
    s.group("r1-boundary");
    s.check("boundary.udud.n7", R1, || {
        let rep = ones_count(1, &"UDUD".parse()?, 7)?;
        let bounds = match rep.predicted {
            Prediction::Bounds(lo, hi) => format!("[{lo}, {hi}]"),
            Prediction::Exact(v) => format!("exactly {v}"),
        };
        Ok(("ones 9 within [7, 11]".into(), format!("ones {} within {bounds}", rep.ones_count)))
    });
}

fn conjecture_checks(s: &mut Suite) {
    const CONJ: &str = "conjectured elementary divisors of K(V(U^kD^k)_n)";
    const REM: &str = "closed form for k = n - 2 at r = 1";
    s.group("conjecture");
    for n in 1..=6 {
        for k in 1..=n {
            s.check(format!("conjecture.r1.n{n}.k{k}"), CONJ, || conj_cell(1, n, k));
        }
    }
    for n in 1..=4 {
        for k in 1..=n {
            s.report(format!("conjecture.r2.n{n}.k{k}"), CONJ, || conj_cell(2, n, k));
        }
    }
    for n in 4..=6 {
        s.check(format!("conjecture.closed_form.n{n}"), REM, || {
            Ok((
                show(n_minus_two_closed_form(n)?),
                show(tower_critical_group(&WordPolynomial::from_word(&UDWord::up_down_power(n - 2), 1)?, n)?),
            ))
        });
    }
    s.check("conjecture.closed_form.n5.value", REM, || {
        let g = n_minus_two_closed_form(5)?;
        Ok((
            "Z/60 ⊕ Z/60 ⊕ Z/60 ⊕ Z/1620 of order 349920000".into(),
            format!("{g} of order {}", g.order().unwrap_or_default()),
        ))
    });
}

fn conj_cell(r: usize, n: usize, k: usize) -> Result<(String, String)> {
    let rep = check_conjecture_56(r, n, k)?;
    let fmt = |v: &[crate::linalg::JsonInt]| v.iter().map(|x| x.0.to_string()).collect::<Vec<_>>().join(",");
    let pred = if rep.d_multiplicity < 0 {
        format!("ill-formed (multiplicity {})", rep.d_multiplicity)
    } else {
        format!("[{}]", fmt(&rep.predicted))
    };
    Ok((pred, format!("[{}]", fmt(&rep.computed))))
}

/// Seeded structural checks over posets, character tables, graphs and SNF.
pub fn properties_suite(seed: u64) -> Vec<VerificationResult> {
    let mut s = Suite::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    poset_properties(&mut s, &mut rng);
    group_properties(&mut s, &mut rng);
    graph_properties(&mut s, &mut rng);
    snf_properties(&mut s, &mut rng);
    s.finish()
}

const RANGES: [(usize, usize); 3] = [(1, 6), (2, 5), (3, 4)];

fn poset_properties(s: &mut Suite, rng: &mut ChaCha8Rng) {
    s.group("posets");
    s.property("DU - UD = rI", "differential poset relation", grid().map(|(r, n)| {
        let du = down_matrix(r, n + 1).mul(&up_matrix(r, n))?;
        let ud = if n == 0 {
            IntMatrix::zeros(1, 1)
        } else {
            up_matrix(r, n - 1).mul(&down_matrix(r, n))?
        };
        let want = IntMatrix::identity(rank_size(r, n as i64) as usize).scale(&BigInt::from(r));
        Ok((du.sub(&ud)? != want).then(|| format!("r={r} n={n}")))
    }));
    s.property("ch(UD_n)", "eigenvalues of UD", grid().map(|(r, n)| {
        let f = WordPolynomial::new(r, vec![BigInt::zero(), BigInt::one()]);
        char_poly_case(&f, n)
    }));
    let fs: Vec<(WordPolynomial, usize)> = (0..12)
        .map(|_| {
            let r = rng.gen_range(1..=3);
            let coeffs = (0..4).map(|_| BigInt::from(rng.gen_range(0..4))).collect();
            let n = rng.gen_range(0..=RANGES[r - 1].1.min(4));
            (WordPolynomial::new(r, coeffs), n)
        })
        .collect();
    s.property("ch(f(U,D)_n)", "eigenvalues of sums of balanced words", fs.iter().map(|(f, n)| char_poly_case(f, *n)));
    s.property("sum of e(x)^2 = r^n n!", "path counts", grid().map(|(r, n)| {
        let total: BigInt = rank_basis(r, n).elements().iter().map(|x| path_count(x).pow(2)).sum();
        let want = BigInt::from(r).pow(n as u32) * factorial(n);
        Ok((total != want).then(|| format!("r={r} n={n}: {total} ≠ {want}")))
    }));
    s.property("down maps have unit SNF", "surjectivity of D over Y^r", grid().filter(|p| p.1 > 0).map(|(r, n)| {
        let snf = smith_normal_form(&down_matrix(r, n));
        let want = rank_size(r, n as i64 - 1) as usize;
        Ok((snf.ones_count() != want).then(|| format!("r={r} n={n}")))
    }));
    s.property("C̃ SNF = eigenvalue formula for UD", "SNF over Z[t] for Y^r", grid().filter(|p| p.1 > 0).map(|(r, n)| {
        let f = WordPolynomial::new(r, vec![BigInt::zero(), BigInt::one()]);
        let c = poly_operator_matrix(&f, n).shifted_negation(&BigInt::from(r * n))?;
        let spec: Vec<(BigInt, usize)> = (0..=n)
            .filter(|&i| delta_p(r, (n - i) as i64) > 0)
            .map(|i| (BigInt::from(r * (n - i)), delta_p(r, (n - i) as i64) as usize))
            .collect();
        Ok((smith_normal_form(&c).diagonal != snf_from_eigenvalues(&spec)?).then(|| format!("r={r} n={n}")))
    }));
}

fn grid() -> impl Iterator<Item = (usize, usize)> {
    RANGES.into_iter().flat_map(|(r, nmax)| (0..=nmax).map(move |n| (r, n)))
}

fn char_poly_case(f: &WordPolynomial, n: usize) -> Result<Option<String>> {
    let alpha = alpha_values(f, n);
    let roots: Vec<(&BigInt, usize)> = (0..=n)
        .map(|i| (&alpha[i], delta_p(f.r(), (n - i) as i64).max(0) as usize))
        .collect();
    let want = IntPoly::from_roots(roots);
    let got = char_poly(&poly_operator_matrix(f, n))?;
    Ok((got != want).then(|| format!("f={f} r={} n={n}", f.r())))
}

fn random_group(rng: &mut ChaCha8Rng) -> Result<CharacterTable> {
    match rng.gen_range(0..3) {
        0 => build_symmetric_table(rng.gen_range(2..=5)),
        1 => build_dihedral_table(rng.gen_range(3..=7)),
        _ => {
            let choices: [&[usize]; 8] = [&[2], &[3], &[4], &[6], &[2, 2], &[2, 4], &[3, 3], &[2, 6]];
            build_abelian_table(choices.choose(rng).expect("nonempty"))
        }
    }
}

/// A random faithful representation with multiplicities in `0..=2`.
fn random_faithful(rng: &mut ChaCha8Rng, t: &CharacterTable) -> RepVector {
    loop {
        let v = RepVector((0..t.num_irreps()).map(|_| rng.gen_range(0..=2)).collect());
        if is_faithful(t, &v) {
            return v;
        }
    }
}

fn group_properties(s: &mut Suite, rng: &mut ChaCha8Rng) {
    s.group("representations");
    let cases: Vec<(CharacterTable, RepVector)> = (0..30)
        .filter_map(|_| {
            let t = random_group(rng).ok()?;
            let v = random_faithful(rng, &t);
            Some((t, v))
        })
        .collect();
    s.property("eigenvectors of C̃", "class columns are eigenvectors", cases.iter().map(|(t, v)| {
        let c = ctilde(t, v)?;
        let chi = v.character(t);
        let dim = CyclotomicInt::from_int(v.dimension(t));
        for g in 0..t.classes().len() {
            let delta: Vec<CyclotomicInt> = (0..t.num_irreps()).map(|i| t.value(i, g).clone()).collect();
            let ev = dim.sub(&chi[g]);
            for i in 0..t.num_irreps() {
                let lhs = (0..t.num_irreps()).fold(CyclotomicInt::zero(), |acc, j| {
                    acc.add(&delta[j].scale(&c[(i, j)]))
                });
                if lhs != ev.mul(&delta[i]) {
                    return Ok(Some(format!("{} V={v} class {}", t.name(), t.classes()[g].name)));
                }
            }
        }
        Ok(None)
    }));
    s.property("|K(V)| order formula", "order formula", cases.iter().map(|(t, v)| {
        let k = critical_group(t, v)?;
        let want = critical_group_order(t, v)?;
        Ok((k.order() != Some(want.clone())).then(|| format!("{} V={v}: {k} vs {want}", t.name())))
    }));
    s.property("repeated values give subgroups", "repeated character values", cases.iter().map(|(t, v)| {
        let k = critical_group(t, v)?;
        for (d, m) in repeated_value_subgroups(t, v)? {
            if !k.contains_power_of_cyclic(&d, m) {
                return Ok(Some(format!("{} V={v}: (Z/{d})^{m} ⊄ {k}", t.name())));
            }
        }
        Ok(None)
    }));
    let abelian: Vec<&(CharacterTable, RepVector)> = cases.iter().filter(|c| c.0.is_abelian()).collect();
    s.property("Cayley Laplacian = C̃", "Cayley graph identification", abelian.iter().map(|(t, v)| {
        let g = cayley_graph(t, v)?;
        Ok((laplacian(&g) != ctilde(t, v)?
            || graph_critical_group(&g, None)? != critical_group(t, v)?)
        .then(|| format!("{} V={v}", t.name())))
    }));
    let coverings: Vec<(usize, usize, RepVector)> = (0..10)
        .map(|_| {
            let m = *[4usize, 6, 8, 9, 12].choose(rng).expect("nonempty");
            let divs: Vec<usize> = (2..=m).filter(|d| m % d == 0).collect();
            let d = *divs.choose(rng).expect("nonempty");
            let t = build_abelian_table(&[m]).expect("cyclic table");
            (m, d, random_faithful(rng, &t))
        })
        .collect();
    s.property("covering maps are surjective", "graph coverings", coverings.iter().map(|(m, d, v)| {
        let g = build_abelian_table(&[*m])?;
        let h = build_abelian_table(&[*d])?;
        let f = abelian_subgroup_fusion(&g, &[*m], &h, &[*d], &[vec![m / d]])?;
        let (_, map) = cayley_covering(&g, &h, &f, v)?;
        Ok((!map.surjective).then(|| format!("Z{m} → Z{d}")))
    }));
}

fn graph_properties(s: &mut Suite, rng: &mut ChaCha8Rng) {
    s.group("graphs");
    let mut graphs = Vec::new();
    while graphs.len() < 25 {
        let n = rng.gen_range(2..=6);
        let mut g = Digraph::new((0..n).map(|i| format!("v{i}")).collect()).expect("distinct");
        for a in 0..n {
            for b in 0..n {
                if rng.gen_bool(0.4) {
                    g.add_edge(a, b, rng.gen_range(1..=2)).expect("in range");
                }
            }
        }
        g.set_sink(0).expect("vertex 0 exists");
        if g.reaches(0) {
            graphs.push(g);
        }
    }
    s.property("spanning trees = |K|", "matrix-tree theorem", graphs.iter().map(|g| {
        let k = graph_critical_group(g, None)?;
        let t = spanning_tree_count(g, None)?;
        Ok((k.order() != Some(t.clone())).then(|| format!("{}: {k} vs {t}", g.to_json())))
    }));
    s.property("Laplacian rows sum to zero", "Laplacian", graphs.iter().map(|g| {
        let l = laplacian(g);
        Ok((0..l.rows())
            .any(|i| !l.row(i).iter().sum::<BigInt>().is_zero())
            .then(|| g.to_json()))
    }));
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let data = (0..rows * cols).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect();
    IntMatrix::new(rows, cols, data).expect("shape")
}

/// A random unimodular matrix with its inverse.
fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> (IntMatrix, IntMatrix) {
    let mut p = IntMatrix::identity(n);
    let mut q = IntMatrix::identity(n);
    if n < 2 {
        return (p, q);
    }
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let c = BigInt::from(rng.gen_range(-2..=2));
        let mut e = IntMatrix::identity(n);
        e[(i, j)] = c.clone();
        let mut e_inv = IntMatrix::identity(n);
        e_inv[(i, j)] = -c;
        p = e.mul(&p).expect("square");
        q = q.mul(&e_inv).expect("square");
    }
    (p, q)
}

fn snf_properties(s: &mut Suite, rng: &mut ChaCha8Rng) {
    s.group("snf");
    let mats: Vec<IntMatrix> = (0..40)
        .map(|_| {
            let (r, c) = (rng.gen_range(1..=4), rng.gen_range(1..=5));
            random_matrix(rng, r, c, 6)
        })
        .collect();
    s.property("minor gcds = SNF prefix products", "determinantal divisors", mats.iter().map(|m| {
        let d = smith_normal_form(m).diagonal;
        let mut prefix = BigInt::one();
        for k in 1..=m.rows().min(m.cols()) {
            prefix *= d[k - 1].abs();
            if minors_gcd(m, k)? != prefix {
                return Ok(Some(format!("{} at k={k}", m.to_json())));
            }
        }
        Ok(None)
    }));
    let planted: Vec<(usize, usize, i64)> = (0..15)
        .map(|_| {
            let r = rng.gen_range(1..=3);
            (r, rng.gen_range(1..=RANGES[r - 1].1.min(4)), rng.gen_range(-3..=3))
        })
        .collect();
    s.property("SNF from planted spectrum", "SNF from eigenvalues", planted.into_iter().map(|(r, n, c)| {
        let ud = poly_operator_matrix(&WordPolynomial::new(r, vec![BigInt::zero(), BigInt::one()]), n);
        let shifted = ud.add(&IntMatrix::identity(ud.rows()).scale(&BigInt::from(c)))?;
        let (p, q) = random_unimodular(rng, ud.rows());
        let m = p.mul(&shifted)?.mul(&q)?;
        let spec: Vec<(BigInt, usize)> = (0..=n)
            .filter(|&i| delta_p(r, (n - i) as i64) > 0)
            .map(|i| (BigInt::from((r * i) as i64 + c), delta_p(r, (n - i) as i64) as usize))
            .collect();
        let want = snf_from_eigenvalues(&spec)?;
        Ok((smith_normal_form(&m).diagonal != want).then(|| format!("r={r} n={n} c={c}")))
    }));
}

/// Runs `published` or `properties`.
pub fn run_suite(name: &str, seed: u64) -> Result<Vec<VerificationResult>> {
    match name {
        "published" => Ok(published_suite(seed)),
        "properties" => Ok(properties_suite(seed)),
        other => Err(Error::Invalid(format!("unknown suite {other:?}"))),
    }
}

/// Integrity check of a character table as a single result.
pub fn check_table(table: &CharacterTable) -> VerificationResult {
    let mut s = Suite::new();
    s.group("tables");
    s.check(format!("table.{}", table.name()), "row and column orthogonality", || {
        Ok(("valid".into(), match table.validate() {
            Ok(()) => "valid".into(),
            Err(e) => e.to_string(),
        }))
    });
    s.out.pop().expect("one result")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let mk = |status, asserted| VerificationResult {
            name: "x".into(),
            group: "g".into(),
            anchor: "a".into(),
            expected: String::new(),
            computed: String::new(),
            status,
            asserted,
        };
        assert_eq!(exit_code(&[mk(Status::Pass, true)]), 0);
        assert_eq!(exit_code(&[mk(Status::Fail, false)]), 0);
        assert_eq!(exit_code(&[mk(Status::Fail, true)]), 1);
        assert_eq!(exit_code(&[mk(Status::Fail, true), mk(Status::Error, true)]), 3);
    }

    #[test]
    fn corrupted_table_fails_with_anchor() {
        let t = build_symmetric_table(4).unwrap();
        assert!(check_table(&t).passed());
        let bad = t.corrupted(1, 1, CyclotomicInt::from_int(7));
        let r = check_table(&bad);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.anchor, "row and column orthogonality");
        assert!(r.name.contains("S4"));
    }

    #[test]
    fn properties_are_deterministic_and_pass() {
        let a = properties_suite(7);
        let b = properties_suite(7);
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        for r in &a {
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn unimodular_pairs_invert() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let (p, q) = random_unimodular(&mut rng, 5);
        assert_eq!(p.mul(&q).unwrap(), IntMatrix::identity(5));
    }

    #[test]
    fn random_words_are_balanced() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for k in 0..5 {
            let w = random_balanced_word(&mut rng, k);
            assert!(w.is_balanced());
            assert_eq!(w.half_length(), k);
        }
    }
}
