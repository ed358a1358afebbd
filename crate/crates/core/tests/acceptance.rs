//! Acceptance suite: one PASS/FAIL line per criterion.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use lorentz_core::catalog::{maximal_unipotent, standard_subalgebra};
use lorentz_core::forms::{invariant_sym_forms, lorentz_certificate, quotient_rep, Reason, VerdictTag};
use lorentz_core::lie::make_so;
use lorentz_core::sample::DEFAULT_SEED;
use lorentz_core::verify::{
    check_killing_so12, check_lemma_std_rep, check_parabolics, check_prop_so1n, check_properties,
    check_root_data, check_so2n_identities, check_sylvester, revalidate_form, signature_by_charpoly, CheckReport,
    Status,
};
use lorentz_core::{signature, Signature};

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn new() -> Self {
        Outcome { ok: true, detail: String::new() }
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.ok = false;
            if !self.detail.is_empty() {
                self.detail.push_str("; ");
            }
            self.detail.push_str(&what.into());
        }
    }

    fn report(&mut self, r: &CheckReport) {
        self.require(r.status == Status::Pass, format!("{} {:?}: {:?}", r.name, r.params, r.failures()));
    }
}

fn timed<F: FnOnce(&mut Outcome)>(o: &mut Outcome, label: &str, budget: Duration, f: F) {
    let start = Instant::now();
    f(o);
    let took = start.elapsed();
    o.require(took < budget, format!("{label} took {took:?}, budget {budget:?}"));
}

/// Found verdict, one-dimensional form space, and an independently re-validated generator.
fn positive_quotient(o: &mut Outcome, p: usize, n: usize, h_name: &str, quotient_dim: usize) {
    let g = make_so(p, n).unwrap();
    let h = standard_subalgebra(&g, h_name).unwrap();
    let qr = quotient_rep(&g, &h).unwrap();
    let space = invariant_sym_forms(&qr);
    let tag = format!("so({p},{n})/{h_name}");
    o.require(qr.dim_quotient() == quotient_dim, format!("{tag}: quotient dim {}", qr.dim_quotient()));
    o.require(space.dim() == 1, format!("{tag}: form space dim {}", space.dim()));
    let v = lorentz_certificate(&space);
    o.require(v.tag == VerdictTag::Found, format!("{tag}: verdict {:?}", v.tag));
    if let Some(gen) = space.basis_forms().first() {
        let s = signature(gen).unwrap();
        let d = quotient_dim;
        let one_sign = s.n_zero == 0 && ((s.n_pos, s.n_neg) == (1, d - 1) || (s.n_pos, s.n_neg) == (d - 1, 1));
        o.require(one_sign, format!("{tag}: generator signature {s}"));
        let re = revalidate_form(&h, &qr.complement_matrices(&g), gen);
        o.require(re.as_ref().ok() == Some(&s), format!("{tag}: independent re-validation {re:?}"));
    }
}

fn c1() -> Outcome {
    let mut o = Outcome::new();
    for n in 3..=8 {
        timed(&mut o, &format!("n={n}"), Duration::from_secs(10), |o| {
            positive_quotient(o, 2, n, &format!("so(1,{n})"), n + 1)
        });
    }
    o
}

fn c2() -> Outcome {
    let mut o = Outcome::new();
    for n in 2..=8 {
        timed(&mut o, &format!("n={n}"), Duration::from_secs(5), |o| {
            positive_quotient(o, 1, n, &format!("so(1,{})", n - 1), n)
        });
    }
    o
}

fn c3() -> Outcome {
    let mut o = Outcome::new();
    for n in [4, 6, 8] {
        let g = make_so(2, n).unwrap();
        let name = format!("su(1,{})", n / 2);
        let h = standard_subalgebra(&g, &name).unwrap();
        let qr = quotient_rep(&g, &h).unwrap();
        let space = invariant_sym_forms(&qr);
        let v = lorentz_certificate(&space);
        o.require(v.tag == VerdictTag::None, format!("n={n}: verdict {:?}", v.tag));
        match &v.reason {
            Reason::Pencil { samples, .. } => {
                // every sampled signature, recomputed by the characteristic-polynomial oracle
                let forms = space.basis_forms();
                for (x, sig) in samples {
                    let q = if x == "inf" {
                        forms[1].clone()
                    } else {
                        forms[0].add(&forms[1].scale(&x.parse().unwrap()))
                    };
                    let s = signature_by_charpoly(&q);
                    o.require(s.to_string() == *sig && !s.is_lorentz(), format!("n={n}: sample {x} gives {s}"));
                }
            }
            Reason::IsotropicSubspace { dim, .. } => {
                o.require(2 * dim <= qr.dim_quotient(), format!("n={n}: isotropic dim {dim}"));
            }
            Reason::DegeneratePencil => {}
            other => o.require(false, format!("n={n}: reason {other:?} is not exhaustive")),
        }
        let comp = qr.complement_matrices(&g);
        for q in space.basis_forms() {
            o.require(revalidate_form(&h, &comp, q).is_ok(), format!("n={n}: basis form fails re-validation"));
        }
    }
    o
}

fn c4() -> Outcome {
    let mut o = Outcome::new();
    for k in 2..=6 {
        o.report(&check_lemma_std_rep(k, DEFAULT_SEED).unwrap());
    }
    o
}

fn c5() -> Outcome {
    let mut o = Outcome::new();
    for n in 3..=8 {
        o.report(&check_root_data(n).unwrap());
    }
    o
}

fn c6() -> Outcome {
    let mut o = Outcome::new();
    for n in 3..=8 {
        o.report(&check_prop_so1n(n, DEFAULT_SEED).unwrap());
        o.report(&check_so2n_identities(n, DEFAULT_SEED).unwrap());
    }
    o
}

fn c7() -> Outcome {
    let mut o = Outcome::new();
    for n in 3..=8 {
        o.report(&check_parabolics(n).unwrap());
    }
    o
}

fn c8() -> Outcome {
    let mut o = Outcome::new();
    for n in 3..=8 {
        let g = make_so(2, n).unwrap();
        let mut names = vec![format!("so(1,{n})")];
        if n % 2 == 0 {
            names.push(format!("su(1,{})", n / 2));
        }
        for name in names {
            let h = standard_subalgebra(&g, &name).unwrap();
            let u = maximal_unipotent(&g, &h).unwrap();
            o.require(u.dim() == n - 1, format!("{name} in so(2,{n}): unipotent dim {}", u.dim()));
        }
    }
    o
}

fn c9() -> Outcome {
    let mut o = Outcome::new();
    o.report(&check_killing_so12().unwrap());
    let kf = make_so(1, 2).unwrap().killing_form().unwrap();
    let s = signature(&kf).unwrap();
    o.require(s == Signature::new(2, 1, 0), format!("signature {s}"));
    o
}

fn c10() -> Outcome {
    let mut o = Outcome::new();
    for n in 2..=8 {
        o.report(&check_properties(&make_so(1, n).unwrap(), DEFAULT_SEED).unwrap());
    }
    for n in 3..=8 {
        o.report(&check_properties(&make_so(2, n).unwrap(), DEFAULT_SEED).unwrap());
    }
    o.report(&check_sylvester(DEFAULT_SEED));
    o
}

fn c11() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_lorentz"))
        .args(["verify", "all", "--max-n", "8"])
        .env_remove("LORENTZ_SEED")
        .output()
        .expect("binary runs");
    let took = start.elapsed();
    o.require(out.status.code() == Some(0), format!("exit {:?}", out.status.code()));
    o.require(took < Duration::from_secs(60), format!("took {took:?}"));
    let text = String::from_utf8_lossy(&out.stdout);
    o.require(text.contains(" 0 fail, 0 undetermined"), "summary line");
    o
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("so(2,n)/so(1,n), n=3..8: one invariant form, Lorentz, <10 s each", c1),
        ("so(1,n)/so(1,n-1), n=2..8: one invariant form, Lorentz, <5 s each", c2),
        ("su(1,n/2) in so(2,n), n=4,6,8: no Lorentz form, exact verdict", c3),
        ("standard representation suite, k=2..6", c4),
        ("so(2,n) restricted roots and multiplicities, n=3..8", c5),
        ("root-space bracket identities, n=3..8", c6),
        ("parabolic suite, n=3..8", c7),
        ("maximal unipotent subalgebras have dimension n-1", c8),
        ("Killing form of so(1,2) has signature (2,1,0)", c9),
        ("property suites: Jacobi, Sylvester, Killing invariance, sl2-triples", c10),
        ("`verify all --max-n 8` exits 0 in under 60 s", c11),
    ];
    let mut failed = 0;
    for (i, (label, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        let mark = if o.ok { "PASS" } else { "FAIL" };
        let mut line = format!("{mark} criterion {:>2}: {label} [{:.2?}]", i + 1, start.elapsed());
        if !o.ok {
            failed += 1;
            line.push_str(&format!(" :: {}", o.detail));
        }
        println!("{line}");
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
