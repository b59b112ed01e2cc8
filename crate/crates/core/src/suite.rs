//! The statement suite: every catalogued lemma, proposition and theorem
//! replayed against one algebra, with a single structured report.
//!
//! Statements with a structural hypothesis (orthomodularity) are gated on
//! the corresponding check and reported not-applicable when it fails, so
//! the suite stays sound on arbitrary validated algebras. Quantification
//! over deductive systems enumerates all subsets under a budget;
//! quantification over states runs on the sample assembled by
//! [`states::sample_states`]. Reports are deterministic for a fixed seed
//! and budget.

use serde::Serialize;

use crate::algebra::FiniteAlgebra;
use crate::ds::{self, DsProperty, SubsetFlags};
use crate::states::{self, SampleConfig, StateSpaceReport, StateTheoremReport, StateVector};
use crate::term_laws::{self, LawReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Depth {
    Core,
    Ds,
    States,
    All,
}

impl Depth {
    pub fn parse(s: &str) -> Option<Depth> {
        match s {
            "core" => Some(Depth::Core),
            "ds" => Some(Depth::Ds),
            "states" => Some(Depth::States),
            "all" => Some(Depth::All),
            _ => None,
        }
    }

    fn runs_ds(self) -> bool {
        matches!(self, Depth::Ds | Depth::All)
    }

    fn runs_states(self) -> bool {
        matches!(self, Depth::States | Depth::All)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Elems { elems: Vec<usize> },
    Subset { mask: String, elems: Vec<usize> },
    State { state: StateVector, elems: Vec<usize> },
    Pair { x: usize, y: usize },
    Mismatch { detail: String },
}

#[derive(Debug, Clone, Serialize)]
pub struct Entry {
    pub label: String,
    pub quote: String,
    pub applicable: bool,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Structure classification of the algebra, with replayable reports.
#[derive(Debug, Clone, Serialize)]
pub struct StructureProfile {
    pub ioml: bool,
    pub boolean: bool,
    pub qw: bool,
    pub iom_report: LawReport,
    pub cup_commutative: LawReport,
    pub qw_report: LawReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub algebra: String,
    pub depth: Depth,
    pub structure: StructureProfile,
    pub entries: Vec<Entry>,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| e.verdict == Verdict::Fails)
    }

    pub fn all_applicable_hold(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.entries.iter().filter(|e| e.verdict == verdict).count()
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Carrier-size cap for full 2^n subset enumeration.
    pub subset_budget: usize,
    /// Seeded convex combinations added to the state sample.
    pub samples: usize,
    pub seed: u64,
    pub witness_cap: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            subset_budget: ds::DEFAULT_SUBSET_BUDGET,
            samples: 16,
            seed: 0,
            witness_cap: term_laws::WITNESS_CAP,
        }
    }
}

struct DsData {
    flags: Vec<SubsetFlags>,
    ioml_char: ds::Characterization,
    boolean_char: ds::Characterization,
    sep_p1: ds::SeparationReport,
    sep_p2: ds::SeparationReport,
}

struct StData {
    report: StateSpaceReport,
    theorems: Vec<StateTheoremReport>,
    all_t1: bool,
    all_t2: bool,
    all_t5: bool,
}

struct Ctx<'a> {
    alg: &'a FiniteAlgebra,
    ioml: bool,
    boolean: bool,
    cap: usize,
}

impl Ctx<'_> {
    fn law(&self, id: &str) -> LawReport {
        term_laws::check_with_cap(self.alg, term_laws::find(id), self.cap)
    }
}

fn elems_witnesses(report: &LawReport) -> Vec<Witness> {
    report
        .witnesses
        .iter()
        .map(|w| Witness::Elems { elems: w.clone() })
        .collect()
}

fn entry(label: &str, quote: &str, verdict: Verdict, witnesses: Vec<Witness>) -> Entry {
    Entry {
        label: label.to_string(),
        quote: quote.to_string(),
        applicable: matches!(verdict, Verdict::Holds | Verdict::Fails),
        verdict,
        witnesses,
        note: None,
    }
}

fn skipped(label: &str, quote: &str, why: &str) -> Entry {
    let mut e = entry(label, quote, Verdict::Skipped, Vec::new());
    e.note = Some(format!("skipped: {why}"));
    e
}

/// Runs every registered statement at the given depth.
pub fn run_suite(
    alg: &FiniteAlgebra,
    algebra_id: &str,
    depth: Depth,
    config: &SuiteConfig,
) -> SuiteReport {
    let iom_report = term_laws::check_id(alg, "IOM");
    let cup_commutative = term_laws::check_id(alg, "CUPCOMM");
    let qw_report = term_laws::check_id(alg, "QW");
    let ioml = iom_report.holds;
    let boolean = ioml && cup_commutative.holds;
    let structure = StructureProfile {
        ioml,
        boolean,
        qw: qw_report.holds,
        iom_report,
        cup_commutative,
        qw_report,
    };

    let ctx = Ctx {
        alg,
        ioml,
        boolean,
        cap: config.witness_cap,
    };

    let mut entries = Vec::new();
    core_entries(&mut entries, &ctx);
    ds_entries(&mut entries, &ctx, depth, config);
    states_entries(&mut entries, &ctx, algebra_id, depth, config);

    SuiteReport {
        algebra: algebra_id.to_string(),
        depth,
        structure,
        entries,
    }
}

/// A statement that is one pointwise law (or a conjunction of a few),
/// optionally gated on orthomodularity.
fn law_entry(ctx: &Ctx, label: &str, quote: &str, ioml_hyp: bool, ids: &[&str]) -> Entry {
    if ioml_hyp && !ctx.ioml {
        let mut e = entry(label, quote, Verdict::NotApplicable, Vec::new());
        e.note = Some("hypothesis fails: not an IOML".into());
        return e;
    }
    for id in ids {
        let report = ctx.law(id);
        if !report.holds {
            return entry(label, quote, Verdict::Fails, elems_witnesses(&report));
        }
    }
    entry(label, quote, Verdict::Holds, Vec::new())
}

fn core_entries(entries: &mut Vec<Entry>, ctx: &Ctx) {
    let single: &[(&str, bool, &str)] = &[
        ("Lemma2.1(1)", false, "L2.1(1)"),
        ("Lemma2.1(2)", false, "L2.1(2)"),
        ("Lemma2.1(3)", false, "L2.1(3)"),
        ("Lemma2.1(4)", false, "L2.1(4)"),
        ("Lemma2.1(5)", false, "L2.1(5)"),
        ("Lemma2.1(6)", false, "L2.1(6)"),
        ("Lemma2.1(7)", false, "L2.1(7)"),
        ("Lemma2.1(8)", false, "L2.1(8)"),
        ("Lemma2.1(9)", false, "L2.1(9)"),
        ("Lemma2.3(Iabs-i)", false, "IABS"),
        ("Lemma2.3(Pimpl)", false, "PIMPL"),
        ("Lemma2.5(1)", false, "L2.5(1)"),
        ("Lemma2.5(2)", false, "L2.5(2)"),
        ("Lemma2.5(3)", false, "L2.5(3)"),
        ("Prop2.2(1)", false, "P2.2(1)"),
        ("Prop2.2(2)", false, "P2.2(2)"),
        ("Prop2.2(3)", false, "P2.2(3)"),
        ("Prop2.2(4)", false, "P2.2(4)"),
        ("Prop2.2(5)", false, "P2.2(5)"),
        ("Prop2.2(6)", false, "P2.2(6)"),
        ("Prop2.2(7)", false, "P2.2(7)"),
        ("Prop2.8(1)", true, "P2.8(1)"),
        ("Prop2.8(2)", true, "P2.8(2)"),
        ("Prop2.8(3)", true, "P2.8(3)"),
        ("Prop2.8(4)", true, "P2.8(4)"),
        ("Prop2.9(1)", true, "P2.9(1)"),
        ("Prop2.9(2)", true, "P2.9(2)"),
        ("Prop2.9(3)", true, "P2.9(3)"),
        ("Prop2.9(4)", true, "P2.9(4)"),
        ("Prop2.9(5)", true, "P2.9(5)"),
        ("Prop2.9(7a)", true, "P2.9(7a)"),
        ("Prop2.9(7b)", true, "P2.9(7b)"),
        ("Prop2.9(8)", true, "P2.9(8)"),
        ("Prop2.13(1)", false, "P2.13(1)"),
        ("Prop2.13(2)", false, "P2.13(2)"),
        ("Prop2.13(3)", false, "P2.13(3)"),
        ("Prop2.13(4)", false, "P2.13(4)"),
        ("Prop2.13(5)", true, "P2.13(5)"),
        ("Thm2.14", true, "T2.14"),
    ];

    // kept in catalog order, so insert composites at their labels
    let push_singles = |range: std::ops::Range<usize>, entries: &mut Vec<Entry>| {
        for &(label, hyp, id) in &single[range] {
            let quote = term_laws::find(id).formula;
            entries.push(law_entry(ctx, label, quote, hyp, &[id]));
        }
    };

    push_singles(0..9, entries); // Lemma 2.1

    entries.push(law_entry(
        ctx,
        "Lemma2.3(iG)",
        "x*→x = x; x→x* = x*",
        false,
        &["iG", "iG'"],
    ));
    push_singles(9..11, entries); // Iabs-i, Pimpl

    // three equivalent characterizations of implicativity
    {
        let impl_holds = ctx.law("IMPL").holds;
        let b = ctx.law("iG").holds && ctx.law("IABS").holds;
        let c = ctx.law("PIMPL").holds && ctx.law("IABS").holds;
        let verdict = if impl_holds == b && b == c {
            Verdict::Holds
        } else {
            Verdict::Fails
        };
        let witnesses = if verdict == Verdict::Fails {
            vec![Witness::Mismatch {
                detail: format!("(Impl)={impl_holds}, (iG)+(Iabs-i)={b}, (Pimpl)+(Iabs-i)={c}"),
            }]
        } else {
            Vec::new()
        };
        entries.push(entry(
            "Lemma2.4",
            "implicative iff (iG)+(Iabs-i) iff (Pimpl)+(Iabs-i)",
            verdict,
            witnesses,
        ));
    }

    push_singles(11..14, entries); // Lemma 2.5
    push_singles(14..21, entries); // Prop 2.2

    // the three orthomodularity identities agree
    {
        let iom = ctx.law("IOM");
        let p = ctx.law("IOM'");
        let s = ctx.law("IOM''");
        let agree = iom.holds == p.holds && iom.holds == s.holds;
        let witnesses = if agree {
            Vec::new()
        } else {
            vec![Witness::Mismatch {
                detail: format!(
                    "(IOM)={}, (IOM')={}, (IOM'')={}",
                    iom.holds, p.holds, s.holds
                ),
            }]
        };
        entries.push(entry(
            "Lemma2.6",
            "(IOM) iff (IOM') iff (IOM'')",
            if agree { Verdict::Holds } else { Verdict::Fails },
            witnesses,
        ));
    }

    push_singles(21..25, entries); // Prop 2.8

    push_singles(25..30, entries); // Prop 2.9 (1)-(5)
    {
        let mut e = law_entry(
            ctx,
            "Prop2.9(6)",
            term_laws::find("P2.9(6)").formula,
            true,
            &["P2.9(6)"],
        );
        e.note = Some("read as mixed antisymmetry of ≤_Q and ≤".into());
        entries.push(e);
    }
    push_singles(30..33, entries); // Prop 2.9 (7a)-(8)

    // four-way equivalence of orthomodularity with the QW conditions
    {
        let iom = ctx.ioml;
        let qw = ctx.law("QW").holds;
        let qw1 = ctx.law("QW1").holds;
        let qw2 = ctx.law("QW2").holds;
        let agree = iom == qw && iom == qw1 && iom == qw2;
        let witnesses = if agree {
            Vec::new()
        } else {
            vec![Witness::Mismatch {
                detail: format!("IOML={iom}, (QW)={qw}, (QW1)={qw1}, (QW2)={qw2}"),
            }]
        };
        entries.push(entry(
            "Thm2.10",
            "IOML iff (QW1) iff (QW2) iff (QW)",
            if agree { Verdict::Holds } else { Verdict::Fails },
            witnesses,
        ));
    }

    // orthomodularity iff ≤_L ⊆ ≤_Q iff the absorption form
    {
        let iom = ctx.ioml;
        let b = ctx.law("T2.11(b)").holds;
        let c = ctx.law("T2.11(c)").holds;
        let agree = iom == b && iom == c;
        let witnesses = if agree {
            Vec::new()
        } else {
            vec![Witness::Mismatch {
                detail: format!("IOML={iom}, ≤_L⊆≤_Q={b}, absorption={c}"),
            }]
        };
        entries.push(entry(
            "Thm2.11",
            "IOML iff (≤_L implies ≤_Q) iff (x≤_L y implies y=y⋓x)",
            if agree { Verdict::Holds } else { Verdict::Fails },
            witnesses,
        ));
    }
    entries.push(law_entry(
        ctx,
        "Thm2.11(cons)",
        term_laws::find("T2.11cons").formula,
        true,
        &["T2.11cons"],
    ));

    push_singles(33..37, entries); // Prop 2.13 (1)-(4)
    push_singles(37..39, entries); // Prop 2.13(5), Thm 2.14
}

const DS_LABELS: &[(&str, &str)] = &[
    ("Prop3.2", "(F1) iff (F1'): x∈F, y∈X imply y→x∈F"),
    (
        "Prop3.4",
        "F∈DS iff nonempty+(F2)+(F4) iff nonempty+(F2)+(F3)",
    ),
    ("Def3.3(incl)", "DS = pDS ⊆ qDS ⊆ oDS"),
    ("P2-implies-P1", "(P2) implies (P1) for every subset"),
    ("Thm3.5(1)", "IOML iff every o-DS satisfies (P1)"),
    (
        "Thm3.5(2)",
        "implicative-Boolean iff every o-DS satisfies (P2)",
    ),
    (
        "Thm3.6(1)",
        "IOML iff every pair y⋠_L x is separated by an o-DS with (P1)",
    ),
    (
        "Thm3.6(2)",
        "implicative-Boolean iff every pair y⋠_L x is separated by an o-DS with (P2)",
    ),
];

fn ds_entries(entries: &mut Vec<Entry>, ctx: &Ctx, depth: Depth, config: &SuiteConfig) {
    if !depth.runs_ds() {
        for (label, quote) in DS_LABELS {
            entries.push(skipped(label, quote, "depth"));
        }
        return;
    }
    let alg = ctx.alg;
    let n = alg.size();
    if n > config.subset_budget {
        for (label, quote) in DS_LABELS {
            entries.push(skipped(label, quote, "budget"));
        }
        return;
    }

    let flags: Vec<SubsetFlags> = (0..1u64 << n).map(|m| ds::classify_subset(alg, m)).collect();
    let data = DsData {
        ioml_char: ds::characterize_ioml_via_ds(alg, config.subset_budget).expect("budget checked"),
        boolean_char: ds::characterize_boolean_via_ds(alg, config.subset_budget)
            .expect("budget checked"),
        sep_p1: ds::separation_check(alg, DsProperty::P1, config.subset_budget)
            .expect("budget checked"),
        sep_p2: ds::separation_check(alg, DsProperty::P2, config.subset_budget)
            .expect("budget checked"),
        flags,
    };

    let subset_witness = |mask: u64| Witness::Subset {
        mask: format!("{mask:#x}"),
        elems: Vec::new(),
    };
    let quote = |label: &str| {
        DS_LABELS
            .iter()
            .find(|(l, _)| *l == label)
            .expect("registered ds label")
            .1
    };

    // Prop 3.2: on IOMLs, (F1) iff (F1') subset-wise
    if !ctx.ioml {
        let mut e = entry("Prop3.2", quote("Prop3.2"), Verdict::NotApplicable, Vec::new());
        e.note = Some("hypothesis fails: not an IOML".into());
        entries.push(e);
    } else {
        let bad = data
            .flags
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, f)| f.f1 != f.f1_prime);
        entries.push(match bad {
            None => entry("Prop3.2", quote("Prop3.2"), Verdict::Holds, Vec::new()),
            Some((mask, _)) => entry(
                "Prop3.2",
                quote("Prop3.2"),
                Verdict::Fails,
                vec![subset_witness(mask as u64)],
            ),
        });
    }

    // Prop 3.4: three-way equivalence of the DS characterizations
    {
        let bad = data.flags.iter().enumerate().find(|(_, f)| {
            let a = f.is_kind(ds::DsKind::Ds);
            let b = !f.empty && f.f2 && f.f4;
            let c = !f.empty && f.f2 && f.f3;
            a != b || b != c
        });
        entries.push(match bad {
            None => entry("Prop3.4", quote("Prop3.4"), Verdict::Holds, Vec::new()),
            Some((mask, _)) => entry(
                "Prop3.4",
                quote("Prop3.4"),
                Verdict::Fails,
                vec![subset_witness(mask as u64)],
            ),
        });
    }

    // family inclusions, with DS = pDS as an equality
    {
        let bad = data.flags.iter().enumerate().find(|(_, f)| {
            let ds_ = f.is_kind(ds::DsKind::Ds);
            let pds = f.is_kind(ds::DsKind::Pds);
            let qds = f.is_kind(ds::DsKind::Qds);
            let ods = f.is_kind(ds::DsKind::Ods);
            ds_ != pds || (pds && !qds) || (qds && !ods)
        });
        entries.push(match bad {
            None => entry("Def3.3(incl)", quote("Def3.3(incl)"), Verdict::Holds, Vec::new()),
            Some((mask, _)) => entry(
                "Def3.3(incl)",
                quote("Def3.3(incl)"),
                Verdict::Fails,
                vec![subset_witness(mask as u64)],
            ),
        });
    }

    // (P2) implies (P1)
    {
        let bad = data
            .flags
            .iter()
            .enumerate()
            .find(|(_, f)| f.p2 && !f.p1);
        entries.push(match bad {
            None => entry("P2-implies-P1", quote("P2-implies-P1"), Verdict::Holds, Vec::new()),
            Some((mask, _)) => entry(
                "P2-implies-P1",
                quote("P2-implies-P1"),
                Verdict::Fails,
                vec![subset_witness(mask as u64)],
            ),
        });
    }

    let char_entry = |label: &str, ch: &ds::Characterization| {
        if ch.agree {
            entry(label, quote(label), Verdict::Holds, Vec::new())
        } else {
            let mut witnesses = vec![Witness::Mismatch {
                detail: format!("structure={}, deductive-systems={}", ch.left, ch.right),
            }];
            if let Some(w) = &ch.witness {
                witnesses.push(Witness::Subset {
                    mask: format!("{:#x}", w.mask),
                    elems: vec![w.x, w.y],
                });
            }
            entry(label, quote(label), Verdict::Fails, witnesses)
        }
    };
    entries.push(char_entry("Thm3.5(1)", &data.ioml_char));
    entries.push(char_entry("Thm3.5(2)", &data.boolean_char));

    let sep_entry = |label: &str, sep: &ds::SeparationReport, structure: bool| {
        if sep.holds == structure {
            entry(label, quote(label), Verdict::Holds, Vec::new())
        } else {
            let mut witnesses = vec![Witness::Mismatch {
                detail: format!("structure={}, separation={}", structure, sep.holds),
            }];
            if let Some((x, y)) = sep.failing_pair {
                witnesses.push(Witness::Pair { x, y });
            }
            entry(label, quote(label), Verdict::Fails, witnesses)
        }
    };
    entries.push(sep_entry("Thm3.6(1)", &data.sep_p1, ctx.ioml));
    entries.push(sep_entry("Thm3.6(2)", &data.sep_p2, ctx.boolean));
}

const STATE_THEOREM_QUOTES: &[(&str, &str)] = &[
    ("Lemma4.2", "s(0)=0; s(x*)=1−s(x); y≤_L x implies s(y)≤s(x)"),
    ("Prop4.4", "(T5)⇒(T4)⇒(T2)⇒(T1) and (T5)⇒(T3)"),
    ("Prop4.5", "(T4)⇒(T3)"),
    ("Prop4.6", "(T3)⇒(T5)"),
    ("Thm4.7", "(T5)⇔(T4)⇔(T3) and (T3)⇒(T2)⇒(T1)"),
    ("Prop4.8", "{0,1}-state: valuation iff Jauch-Piron"),
    ("Prop4.10(1)", "Ker(s) is an o-DS"),
    ("Prop4.10(2)", "Ker(s) is a q-DS iff s is Jauch-Piron"),
    ("Prop4.10(3)", "Ker(s) is a p-DS iff s is a (P)-state"),
    (
        "Cor4.11(1)",
        "x≤_L y and x∈Ker(s) imply y, x→y, y→x ∈ Ker(s)",
    ),
    ("Cor4.11(2)", "x∈Ker(s) and y≤_L x imply x⋓y∈Ker(s)"),
    (
        "Cor4.11(3)",
        "(P)-state: x∈Ker(s) and y∈X imply x⋓y∈Ker(s)",
    ),
    ("Prop4.12(1)", "Ker(s) satisfies (P1)"),
    ("Prop4.12(2)", "(P)-state: Ker(s) satisfies (P2)"),
];

const SET_OF_STATES_LABELS: &[(&str, &str)] = &[
    ("Remark5.2(1)", "a rich set of states is unital and full"),
    (
        "Remark5.2(2)",
        "S full and s(x)≤s(y) for all s∈S imply x≤_L y",
    ),
    ("Remark5.2(3)", "S full and s(x)=s(y) for all s∈S imply x=y"),
    ("Prop5.3", "a unital set of Jauch-Piron states is rich"),
    ("Prop5.4(1)", "a rich set of states implies IOML"),
    (
        "Prop5.4(2)",
        "a rich set of (P)-states implies implicative-Boolean",
    ),
    ("Prop5.5(1)", "a full set of states implies IOML"),
    (
        "Prop5.5(2)",
        "a full set of valuations implies implicative-Boolean",
    ),
];

fn states_entries(
    entries: &mut Vec<Entry>,
    ctx: &Ctx,
    algebra_id: &str,
    depth: Depth,
    config: &SuiteConfig,
) {
    if !depth.runs_states() {
        for (label, quote) in STATE_THEOREM_QUOTES.iter().chain(SET_OF_STATES_LABELS) {
            entries.push(skipped(label, quote, "depth"));
        }
        return;
    }

    let alg = ctx.alg;
    let report = states::state_space_report(alg, algebra_id).expect("state LPs are well-formed");
    let sample_config = SampleConfig {
        combos: config.samples,
        seed: config.seed,
        budget: config.subset_budget,
    };
    let sample = states::sample_states(alg, algebra_id, &report, &sample_config)
        .expect("probe states replay as valid");
    let theorems = states::verify_state_theorems(alg, &sample).expect("sample states are valid");

    let mut all_t1 = true;
    let mut all_t2 = true;
    let mut all_t5 = true;
    for s in &sample {
        let class = states::classify_state(alg, s).expect("sample states are valid");
        all_t1 &= class.t1.holds;
        all_t2 &= class.t2.holds;
        all_t5 &= class.t5.holds;
    }
    let data = StData {
        report,
        theorems,
        all_t1,
        all_t2,
        all_t5,
    };

    for t in &data.theorems {
        let quote = STATE_THEOREM_QUOTES
            .iter()
            .find(|(l, _)| *l == t.label)
            .expect("state theorem label registered")
            .1;
        let verdict = if !t.applicable {
            Verdict::NotApplicable
        } else if t.holds {
            Verdict::Holds
        } else {
            Verdict::Fails
        };
        let witnesses = match &t.witness {
            Some((state, elems)) => vec![Witness::State {
                state: state.clone(),
                elems: elems.clone(),
            }],
            None => Vec::new(),
        };
        let mut e = entry(t.label, quote, verdict, witnesses);
        if !t.applicable {
            e.note = Some("hypothesis fails: not an IOML".into());
        }
        entries.push(e);
    }

    let quote = |label: &str| {
        SET_OF_STATES_LABELS
            .iter()
            .find(|(l, _)| *l == label)
            .expect("registered label")
            .1
    };
    let na = |label: &str, why: &str| {
        let mut e = entry(label, quote(label), Verdict::NotApplicable, Vec::new());
        e.note = Some(format!("hypothesis fails: {why}"));
        e
    };
    let simple = |label: &str, conclusion: bool, witnesses: Vec<Witness>| {
        entry(
            label,
            quote(label),
            if conclusion { Verdict::Holds } else { Verdict::Fails },
            if conclusion { Vec::new() } else { witnesses },
        )
    };
    let rich = data.report.rich.holds;
    let full = data.report.full.holds;
    let unital = data.report.unital.holds;

    // Remark 5.2(1)
    entries.push(if rich {
        simple("Remark5.2(1)", unital && full, Vec::new())
    } else {
        na("Remark5.2(1)", "state space not rich")
    });

    // Remark 5.2(2): replay of the full probes
    entries.push(if full {
        let bad = data.report.full.probes.iter().find(|p| !p.ok);
        simple(
            "Remark5.2(2)",
            bad.is_none(),
            bad.map(|p| vec![Witness::Pair { x: p.x, y: p.y }]).unwrap_or_default(),
        )
    } else {
        na("Remark5.2(2)", "state space not full")
    });

    // Remark 5.2(3): distinct elements are separated in some direction
    entries.push(if full {
        let mut witness = None;
        'outer: for x in alg.elements() {
            for y in alg.elements() {
                if x == y {
                    continue;
                }
                let separated = data
                    .report
                    .full
                    .probes
                    .iter()
                    .any(|p| ((p.x, p.y) == (x, y) || (p.x, p.y) == (y, x)) && p.ok);
                if !separated {
                    witness = Some(Witness::Pair { x, y });
                    break 'outer;
                }
            }
        }
        simple(
            "Remark5.2(3)",
            witness.is_none(),
            witness.into_iter().collect(),
        )
    } else {
        na("Remark5.2(3)", "state space not full")
    });

    // Prop 5.3, with the evident reading of its elided verb
    let mut p53 = if unital && data.all_t1 {
        simple("Prop5.3", rich, Vec::new())
    } else {
        na("Prop5.3", "not a unital set of Jauch-Piron states")
    };
    p53.note = Some(match p53.note.take() {
        Some(n) => format!("{n}; statement read as: ... is rich"),
        None => "statement read as: ... is rich".into(),
    });
    entries.push(p53);

    entries.push(if rich {
        simple("Prop5.4(1)", ctx.ioml, Vec::new())
    } else {
        na("Prop5.4(1)", "state space not rich")
    });

    entries.push(if rich && data.all_t2 {
        simple("Prop5.4(2)", ctx.boolean, Vec::new())
    } else {
        na("Prop5.4(2)", "not a rich set of (P)-states")
    });

    entries.push(if full {
        simple("Prop5.5(1)", ctx.ioml, Vec::new())
    } else {
        na("Prop5.5(1)", "state space not full")
    });

    entries.push(if full && data.all_t5 {
        simple("Prop5.5(2)", ctx.boolean, Vec::new())
    } else {
        na("Prop5.5(2)", "not a full set of valuations")
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::corpus;

    fn run(id: &str, alg: &FiniteAlgebra, depth: Depth) -> SuiteReport {
        run_suite(alg, id, depth, &SuiteConfig::default())
    }

    #[test]
    fn corpus_has_zero_failures_at_depth_all() {
        for (id, alg) in corpus::all() {
            let report = run(id, &alg, Depth::All);
            let failures: Vec<_> = report.failures().map(|e| e.label.clone()).collect();
            assert!(failures.is_empty(), "{id} fails: {failures:?}");
        }
    }

    #[test]
    fn labels_are_unique_and_complete_at_every_depth() {
        let alg = corpus::b2();
        let full: Vec<String> = run("b2", &alg, Depth::All)
            .entries
            .iter()
            .map(|e| e.label.clone())
            .collect();
        let mut sorted = full.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), full.len(), "duplicate labels");
        for depth in [Depth::Core, Depth::Ds, Depth::States] {
            let labels: Vec<String> = run("b2", &alg, depth)
                .entries
                .iter()
                .map(|e| e.label.clone())
                .collect();
            assert_eq!(labels, full, "label set differs at {depth:?}");
        }
    }

    #[test]
    fn mo2_boolean_structure_entry_fails_with_atom_witness() {
        let alg = corpus::mo2();
        let report = run("mo2", &alg, Depth::Core);
        assert!(report.structure.ioml);
        assert!(!report.structure.boolean);
        assert_eq!(report.structure.cup_commutative.witnesses[0], vec![1, 3]);
        assert!(report.all_applicable_hold());
    }

    #[test]
    fn depth_gates_sections() {
        let alg = corpus::b2();
        let core = run("b2", &alg, Depth::Core);
        assert!(core
            .entries
            .iter()
            .filter(|e| e.label.starts_with("Thm3") || e.label.starts_with("Prop4"))
            .all(|e| e.verdict == Verdict::Skipped));
        let ds_only = run("b2", &alg, Depth::Ds);
        assert!(ds_only
            .entries
            .iter()
            .filter(|e| e.label.starts_with("Thm3"))
            .all(|e| e.verdict == Verdict::Holds));
        assert!(ds_only
            .entries
            .iter()
            .filter(|e| e.label.starts_with("Prop5"))
            .all(|e| e.verdict == Verdict::Skipped));
    }

    #[test]
    fn budget_marks_ds_entries_skipped() {
        let alg = corpus::b8();
        let config = SuiteConfig {
            subset_budget: 4,
            ..SuiteConfig::default()
        };
        let report = run_suite(&alg, "b8", Depth::Ds, &config);
        let e = report
            .entries
            .iter()
            .find(|e| e.label == "Thm3.5(1)")
            .unwrap();
        assert_eq!(e.verdict, Verdict::Skipped);
        assert_eq!(e.note.as_deref(), Some("skipped: budget"));
    }

    #[test]
    fn reports_are_deterministic() {
        let alg = corpus::mo2();
        let a = serde_json::to_string(&run("mo2", &alg, Depth::All)).unwrap();
        let b = serde_json::to_string(&run("mo2", &alg, Depth::All)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn ioml_gated_entries_run_on_corpus() {
        // every corpus member is an IOML, so structure-gated statements run
        for (id, alg) in corpus::all() {
            let report = run(id, &alg, Depth::All);
            for label in ["Prop2.8(1)", "Prop2.9(4)", "Thm2.14", "Prop4.5", "Thm4.7"] {
                let e = report.entries.iter().find(|e| e.label == label).unwrap();
                assert_eq!(e.verdict, Verdict::Holds, "{id}: {label}");
            }
        }
    }

    #[test]
    fn o6_satisfies_every_statement_except_the_unital_jauch_piron_one() {
        // the benzene-ring algebra is a counterexample to "a unital set of
        // Jauch-Piron states is rich": all its states are Jauch-Piron and
        // the state space is unital, yet pairs like (a', b) are never
        // separated. Every other registered statement holds or is gated
        // out, and the biconditionals agree with the non-orthomodular
        // structure.
        let alg = corpus::o6();
        let report = run("o6", &alg, Depth::All);
        assert!(!report.structure.ioml);
        let failures: Vec<_> = report.failures().map(|e| e.label.clone()).collect();
        assert_eq!(failures, vec!["Prop5.3".to_string()]);
        for label in ["Thm2.10", "Thm2.11", "Thm3.5(1)", "Thm3.6(1)", "Prop4.4"] {
            let e = report.entries.iter().find(|e| e.label == label).unwrap();
            assert_eq!(e.verdict, Verdict::Holds, "{label}");
        }
        // orthomodularity-gated statements are not-applicable, never failed
        for label in ["Prop2.8(1)", "Prop2.9(5)", "Thm2.14", "Prop3.2", "Prop4.5"] {
            let e = report.entries.iter().find(|e| e.label == label).unwrap();
            assert_eq!(e.verdict, Verdict::NotApplicable, "{label}");
        }
    }

    #[test]
    fn mo2_set_of_state_hypotheses_gate_correctly() {
        // the α=1, β=0 state is not Jauch-Piron, so the (P)-state and
        // valuation hypotheses fail on MO2 and those entries must be
        // not-applicable rather than failing
        let alg = corpus::mo2();
        let report = run("mo2", &alg, Depth::All);
        for label in ["Prop5.3", "Prop5.4(2)", "Prop5.5(2)"] {
            let e = report.entries.iter().find(|e| e.label == label).unwrap();
            assert_eq!(e.verdict, Verdict::NotApplicable, "{label}");
        }
        for label in ["Prop5.4(1)", "Prop5.5(1)", "Remark5.2(1)"] {
            let e = report.entries.iter().find(|e| e.label == label).unwrap();
            assert_eq!(e.verdict, Verdict::Holds, "{label}");
        }
    }
}
