//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::time::Instant;

use serre_core::homology::reduced_betti;
use serre_core::invariants::{depth, graded_betti, is_cm, reg};
use serre_core::monomial::{alexander_dual_ideal, stanley_reisner_ideal};
use serre_core::serre::{slj_definition, Witness};
use serre_core::verify::{
    check_pd_bound, enumerate_pure, random_ideal_corpus, run_property, run_radical_transfer, CorpusSpec, Fields, Grid,
    Property, PropertyReport,
};
use serre_core::{Face, PrimeField, SimplicialComplex};

const F2: PrimeField = PrimeField::gf2();
const PURE_SEED: u64 = 0x5_e11e_0001;
const MIXED_SEED: u64 = 0x5_e11e_0002;
const IDEAL_SEED: u64 = 0x5_e11e_0003;

fn cx(lists: &[&[usize]], n: usize) -> SimplicialComplex {
    SimplicialComplex::from_index_lists(lists, n).unwrap()
}

fn pure_corpus() -> Vec<SimplicialComplex> {
    let mut corpus = enumerate_pure(5, 3).unwrap();
    corpus.extend(enumerate_pure(4, 3).unwrap());
    corpus.extend(CorpusSpec::random_pure(4, 7, 500, PURE_SEED).generate().unwrap());
    corpus
}

fn mixed_corpus() -> Vec<SimplicialComplex> {
    CorpusSpec::random_nonpure(3, 7, 500, MIXED_SEED).generate().unwrap()
}

struct Line {
    id: usize,
    ok: bool,
    summary: String,
}

fn summarize(reports: &[&PropertyReport]) -> (bool, String) {
    let ok = reports.iter().all(|r| r.passed());
    let parts: Vec<String> = reports
        .iter()
        .map(|r| {
            let mut s = format!("{}: {} checked, {} skipped, {} failures", r.property, r.checked, r.skipped, r.failures.len());
            if !r.informational.is_empty() {
                s += &format!(", {} informational", r.informational.len());
            }
            if let Some(f) = r.failures.first() {
                s += &format!(" [first: {} on\n{}]", f.detail, f.instance);
            }
            s
        })
        .collect();
    (ok, parts.join("; "))
}

fn fixtures() -> (bool, String) {
    let mut errors = Vec::new();
    let mut expect = |what: &str, ok: bool| {
        if !ok {
            errors.push(what.to_string());
        }
    };
    let bowtie = cx(&[&[0, 1, 2], &[2, 3, 4]], 5);
    expect("bowtie depth 2", depth(&bowtie, F2) == Ok(2));
    expect("bowtie (S_2^1)", slj_definition(&bowtie, 2, 1, F2).unwrap().satisfied);
    let v = slj_definition(&bowtie, 2, 0, F2).unwrap();
    expect("bowtie (S_2^0) false at {2}", !v.satisfied && v.witness == Some(Witness::Face { face: Face::singleton(2) }));
    let dual = graded_betti(&alexander_dual_ideal(&stanley_reisner_ideal(&bowtie)), F2).unwrap();
    expect("bowtie dual betti rows", dual.to_rows() == "0 2 2\n1 4 1\n");
    let cycle = cx(&[&[0, 1], &[1, 2], &[0, 2]], 3);
    expect("3-cycle CM", is_cm(&cycle, F2).unwrap().holds);
    expect("reg(x0x1x2) = 3", reg(&stanley_reisner_ideal(&cycle), F2) == Ok(Some(3)));
    let sphere = SimplicialComplex::from_facets(Face::full(4).subsets_of_size(3), 4).unwrap();
    expect("sphere H~_2 = 1", reduced_betti(&sphere, 2, F2) == 1);
    expect("sphere CM", is_cm(&sphere, F2).unwrap().holds);
    let empty = SimplicialComplex::empty(0);
    expect("EMPTY depth 0", depth(&empty, F2) == Ok(0));
    expect("EMPTY H~_-1 = 1", reduced_betti(&empty, -1, F2) == 1);
    let ok = errors.is_empty();
    (ok, if ok { "all fixture values match".into() } else { format!("mismatches: {}", errors.join(", ")) })
}

fn main() {
    let start = Instant::now();
    let pure = pure_corpus();
    let mixed = mixed_corpus();
    let grid = Grid::default();
    let fields = Fields::default();
    let mut lines = Vec::new();

    let t = Instant::now();
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let reisner = single.install(|| run_property(Property::ReisnerEquivalence, &pure, &grid, fields));
    let secs = t.elapsed().as_secs_f64();
    let (ok, s) = summarize(&[&reisner]);
    lines.push(Line { id: 1, ok: ok && secs < 180.0, summary: format!("{s}; {secs:.1}s single-threaded") });

    let dual = run_property(Property::DualGraphEquivalence, &pure, &grid, fields);
    let (ok, s) = summarize(&[&dual]);
    lines.push(Line { id: 2, ok, summary: s });

    let alex = run_property(Property::AlexanderEquivalence, &pure, &grid, fields);
    let (ok, s) = summarize(&[&alex]);
    lines.push(Line { id: 3, ok, summary: s });

    let necessity = run_property(Property::Lemma63Necessity, &mixed, &grid, fields);
    let nonpure = mixed.iter().filter(|c| !c.is_pure()).count();
    let (ok, s) = summarize(&[&necessity]);
    lines.push(Line { id: 4, ok: ok && nonpure > 0, summary: format!("{s}; {nonpure} non-pure instances") });

    let degen_pure = run_property(Property::Degenerations, &pure, &grid, fields);
    let degen_mixed = run_property(Property::Degenerations, &mixed, &grid, fields);
    let (ok, s) = summarize(&[&degen_pure, &degen_mixed]);
    lines.push(Line { id: 5, ok, summary: s });

    let pd = run_property(Property::PdBound, &pure, &grid, fields);
    let rg = run_property(Property::RegBound, &pure, &grid, fields);
    let (mut ok, mut s) = summarize(&[&pd, &rg]);
    let bowtie = cx(&[&[0, 1, 2], &[2, 3, 4]], 5);
    let triangles = cx(&[&[0, 1, 2], &[3, 4, 5]], 6);
    for (name, c, j, want) in [("bowtie", &bowtie, 1, 3usize), ("two triangles", &triangles, 2, 5)] {
        let clause = check_pd_bound(c, j, F2).unwrap().unwrap().into_iter().find(|cl| cl.clause == 1);
        let exact = clause.as_ref().is_some_and(|cl| cl.value == want && cl.bound == want as i64);
        ok &= exact;
        s += &format!("; {name} j={j}: {clause:?}");
    }
    lines.push(Line { id: 6, ok, summary: s });

    let ideals = random_ideal_corpus(4, 3, 300, IDEAL_SEED).unwrap();
    let radical = run_radical_transfer(&ideals, &Grid::new(vec![2, 3], vec![0, 1]).unwrap(), F2);
    let (ok, s) = summarize(&[&radical]);
    lines.push(Line { id: 7, ok, summary: s });

    let skel = run_property(Property::Skeleton, &pure, &grid, fields);
    let (ok, s) = summarize(&[&skel]);
    lines.push(Line { id: 8, ok, summary: s });

    let classical_pure = run_property(Property::Classical, &pure, &grid, fields);
    let classical_mixed = run_property(Property::Classical, &mixed, &grid, fields);
    let (ok, s) = summarize(&[&classical_pure, &classical_mixed]);
    lines.push(Line { id: 9, ok, summary: s });

    let (ok, s) = fixtures();
    lines.push(Line { id: 10, ok, summary: s });

    let mut all = true;
    for l in &lines {
        all &= l.ok;
        println!("criterion {:>2}: {} - {}", l.id, if l.ok { "PASS" } else { "FAIL" }, l.summary);
    }
    println!("acceptance: {} pure + {} mixed instances, {:.1}s total", pure.len(), mixed.len(), start.elapsed().as_secs_f64());
    if !all {
        std::process::exit(1);
    }
}
