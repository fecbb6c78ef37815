//! Acceptance suite: ten criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the report is always printed:
//! `cargo test -p remoteness --test acceptance`.

use std::process::ExitCode;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use remoteness::catalog::{load_catalog, verify_table, CatalogEntry};
use remoteness_core::group::{
    agreement_witness_search, cartesian_product, cyclic_group_remoteness, max_distance_to_powers,
    orbital_witness_search, orbital_witness_valid, transitive_remoteness,
};
use remoteness_core::latin::{
    cyclic_latin, extend_bachelor, find_bachelor_square, find_transversal, first_k_rows_bound,
    first_k_rows_remoteness, random_latin_square, uncovered_cells,
};
use remoteness_core::metric::{
    covering_radius, m_exact, permutation_covering_radius, permutation_remoteness, remoteness, space_diameter,
    space_radius, symmetric_m_lower_bound, FiniteMetricSpace, MOutcome, DEFAULT_SEARCH_BUDGET,
};
use remoteness_core::pair::{strict_triangle_check, tau_e};
use remoteness_core::perm::all_permutations;
use remoteness_core::rgraph::{graph_stats, stability_number};
use remoteness_core::{pair_remoteness, HammingSpace, Permutation, PermutationGroup, RemotenessGraph, SymmetricSpace};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn group_remoteness_brute(g: &PermutationGroup) -> usize {
    permutation_remoteness(&g.elements().unwrap()).unwrap().0
}

fn catalog() -> Vec<CatalogEntry> {
    load_catalog().expect("embedded catalog loads")
}

fn table_reproduction() -> Outcome {
    let start = Instant::now();
    let entries = catalog();
    let report = verify_table(&entries);
    for row in &report.rows {
        ensure(row.pass, || format!("({},{}) {}: expected {}, computed {}", row.degree, row.index, row.name, row.expected, row.computed))?;
    }
    ensure(report.missing_rows.is_empty(), || format!("missing table rows {:?}", report.missing_rows))?;
    ensure(report.multiset_match, || "(degree, order) multiset differs from the table".into())?;
    ensure(report.degree_six.holds, || "degree-6 claim fails".into())?;
    let required = [(3, 3), (4, 4), (5, 5), (5, 10), (7, 7), (7, 14), (7, 21), (9, 81)];
    for (n, order) in required {
        ensure(
            report.rows.iter().any(|r| r.degree == n && r.order == order && r.computed + 1 == n),
            || format!("no degree-{n} group of order {order} with remoteness n-1"),
        )?;
    }
    let count = |n: usize, order: u128| report.rows.iter().filter(|r| r.degree == n && r.order == order && r.computed == n - 1).count();
    ensure(count(8, 8) == 4 && count(8, 16) == 3, || "degree-8 regular or order-16 rows incomplete".into())?;

    let mut controls: Vec<(String, PermutationGroup)> = Vec::new();
    for n in 3..=9 {
        controls.push((format!("S{n}"), PermutationGroup::symmetric(n).unwrap()));
        if n >= 4 {
            controls.push((format!("A{n}"), PermutationGroup::alternating(n).unwrap()));
        }
    }
    for n in [4, 6, 8] {
        controls.push((format!("C{n}"), PermutationGroup::cyclic(&Permutation::standard_cycle(n))));
    }
    controls.push(("D18".into(), PermutationGroup::dihedral(9).unwrap()));
    for (name, g) in &controls {
        let r = transitive_remoteness(g).unwrap().remoteness;
        ensure(r == g.degree(), || format!("control {name}: remoteness {r}, expected {}", g.degree()))?;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 60.0, || format!("took {secs:.1}s"))?;
    Ok(format!("{} catalog groups and {} controls in {secs:.2}s", report.rows.len(), controls.len()))
}

fn cyclic_formula() -> Outcome {
    let mut checked = 0;
    for n in 2..=6 {
        for g in all_permutations(n).filter(Permutation::is_fixed_point_free) {
            let a = cyclic_group_remoteness(&g);
            let brute = group_remoteness_brute(&PermutationGroup::cyclic(&g));
            ensure(a.remoteness == brute, || format!("g = {g}: formula {}, brute force {brute}", a.remoteness))?;
            let attained = max_distance_to_powers(&g, &a.witness);
            ensure(attained == a.remoteness, || format!("g = {g}: witness reaches {attained}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} fixed-point-free generators of degree <= 6"))
}

fn pair_formula() -> Outcome {
    let id = Permutation::identity(6);
    let mut checked = 0;
    for sigma in all_permutations(6).filter(|p| !p.is_identity()) {
        let a = pair_remoteness(&sigma).map_err(|e| e.to_string())?;
        let brute = permutation_remoteness(&[id.clone(), sigma.clone()]).unwrap().0;
        ensure(a.remoteness == brute, || format!("sigma = {sigma}: formula {}, brute force {brute}", a.remoteness))?;
        let m = &a.minimal_permutation;
        let attained = m.distance(&id).max(m.distance(&sigma));
        ensure(attained == brute, || format!("sigma = {sigma}: minimal permutation reaches {attained}"))?;
        checked += 1;
    }
    Ok(format!("{checked} pairs in S6"))
}

fn cyclic_pair_bound() -> Outcome {
    let n = 5;
    let id = Permutation::identity(n);
    let kappa = Permutation::standard_cycle(n);
    let mut checked = 0;
    for p in all_permutations(n).filter(|p| *p != id && *p != kappa) {
        let s = p.distance(&id) + p.distance(&kappa);
        ensure(s > n, || format!("pi = {p}: distance sum {s}"))?;
        checked += 1;
    }
    for e in 2..=4 {
        let t = tau_e(n, e).map_err(|e| e.to_string())?;
        let got = (t.distance(&id), t.distance(&kappa));
        ensure(got == (e, n + 1 - e), || format!("tau_{e} realizes {got:?}"))?;
    }
    Ok(format!("{checked} permutations; tau_2, tau_3, tau_4 realize (2,4), (3,3), (4,2)"))
}

fn latin_suite() -> Outcome {
    let l4 = cyclic_latin(4);
    ensure(find_transversal(&l4).is_none(), || "cyclic_latin(4) has a transversal".into())?;
    ensure(permutation_remoteness(&l4.rows()).unwrap().0 == 4, || "rows of cyclic_latin(4) do not have remoteness 4".into())?;
    let l5 = cyclic_latin(5);
    let t5 = find_transversal(&l5).ok_or("cyclic_latin(5) has no transversal")?;
    let pi = t5.as_permutation(&l5);
    ensure(l5.rows().iter().all(|r| r.distance(&pi) == 4), || "transversal not at distance 4 from every row".into())?;
    ensure(permutation_remoteness(&l5.rows()).unwrap().0 == 4, || "rows of cyclic_latin(5) do not have remoteness 4".into())?;
    let (bound, exact) = first_k_rows_remoteness(&l4, 2).map_err(|e| e.to_string())?;
    ensure(bound == 3 && exact >= 3, || format!("n=4, k=2: bound {bound}, exact {exact}"))?;

    // The row bound against brute force at n <= 5, including random squares.
    let mut rng = rand_chacha_rng(5);
    let mut checked = 0;
    for n in 1..=5 {
        let mut squares = vec![cyclic_latin(n)];
        squares.extend((0..3).map(|_| random_latin_square(n, &mut rng)));
        for sq in &squares {
            for k in 1..=n {
                let (b, e) = first_k_rows_remoteness(sq, k).map_err(|e| e.to_string())?;
                ensure(e >= b, || format!("n={n} k={k}: exact {e} < bound {b}\n{sq}"))?;
                checked += 1;
            }
        }
    }
    // The averaging bound at n = 6, 7: full rows sum to n(n-1) from every pi, so
    // the first k rows are at least n - floor(n/k) away from some row.
    for n in [6, 7] {
        let mut squares = vec![cyclic_latin(n)];
        squares.push(random_latin_square(n, &mut rng));
        for sq in &squares {
            let rows = sq.rows();
            for p in all_permutations(n) {
                let total: usize = rows.iter().map(|r| p.distance(r)).sum();
                ensure(total == n * (n - 1), || format!("n={n}: row distance sum {total} from {p}"))?;
            }
            for k in 1..=n {
                let bound = first_k_rows_bound(sq, k).map_err(|e| e.to_string())?;
                let exact = permutation_remoteness(&rows[..k]).unwrap().0;
                ensure(exact >= bound, || format!("n={n} k={k}: exact {exact} < bound {bound}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} row-bound checks"))
}

fn rand_chacha_rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

fn bachelor_extension() -> Outcome {
    let found = find_bachelor_square(5, 0, 1, 0).map_err(|e| e.to_string())?;
    ensure(uncovered_cells(&found.square).contains(&found.cell), || "reported cell is covered by a transversal".into())?;
    let ext = extend_bachelor(&found);
    ensure(ext.bachelor.cell == (0, 4), || format!("normalized cell {:?}", ext.bachelor.cell))?;
    ensure(uncovered_cells(&ext.bachelor.square).contains(&(0, 4)), || "normalization lost the bachelor cell".into())?;
    ensure(ext.code.len() == (3 * 5 - 1) / 2, || format!("code size {}", ext.code.len()))?;
    let r = permutation_remoteness(&ext.code).unwrap().0;
    ensure(r == 5, || format!("extended code has remoteness {r}"))?;
    Ok(format!("bachelor cell {:?}; 7 codewords with remoteness 5, so m(S5,5) <= 7", found.cell))
}

fn m_table() -> Outcome {
    let space = SymmetricSpace::new(4).unwrap();
    let m = |t| m_exact(&space, t, DEFAULT_SEARCH_BUDGET);
    ensure(m(0).size() == Some(1), || format!("m(S4,0) = {:?}", m(0)))?;
    ensure(m(1) == MOutcome::Unattainable, || format!("m(S4,1) = {:?}", m(1)))?;
    ensure(m(2).size() == Some(2) && m(3).size() == Some(2), || format!("m(S4,2) = {:?}, m(S4,3) = {:?}", m(2), m(3)))?;
    let m4 = m(4).size().ok_or("m(S4,4) not found")?;
    let lower = symmetric_m_lower_bound(4, 4);
    ensure(lower == 3 && (3..=4).contains(&m4), || format!("m(S4,4) = {m4}, lower bound {lower}"))?;
    Ok(format!("m(S4, 0..=4) = 1, -, 2, 2, {m4}"))
}

fn triple_equivalence() -> Outcome {
    let entries = catalog();
    let mut remote = 0;
    for e in &entries {
        let n = e.degree;
        let graph = RemotenessGraph::build(&e.group).map_err(|err| err.to_string())?;
        let alpha = stability_number(&graph);
        ensure(alpha.alpha <= n, || format!("{}: alpha {} > n", e.label(), alpha.alpha))?;
        let by_graph = alpha.alpha == n;
        let orbital = orbital_witness_search(&e.group.orbitals());
        let agreement = agreement_witness_search(&e.group).map_err(|err| err.to_string())?;
        let expected = e.expected_remoteness + 1 == n;
        ensure(
            by_graph == expected && orbital.is_some() == expected && agreement.is_some() == expected,
            || format!("{}: alpha = n {by_graph}, orbital {}, agreement {}", e.label(), orbital.is_some(), agreement.is_some()),
        )?;
        for w in [orbital, agreement, alpha.permutation(&graph)].into_iter().flatten() {
            ensure(orbital_witness_valid(&e.group, &w).unwrap(), || format!("{}: witness {w} fails", e.label()))?;
            let elements = e.group.elements().unwrap();
            ensure(elements.iter().all(|g| g.distance(&w) == n - 1), || format!("{}: {w} not at distance n-1", e.label()))?;
        }
        remote += usize::from(expected);
    }
    Ok(format!("{} groups, {remote} with remoteness n-1, three routes agree", entries.len()))
}

fn random_perm(n: usize, rng: &mut StdRng) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Permutation::from_images(v).unwrap()
}

fn random_code<S: FiniteMetricSpace>(space: &S, max_len: usize, rng: &mut StdRng) -> Vec<usize> {
    let len = rng.gen_range(1..=max_len);
    (0..len).map(|_| rng.gen_range(0..space.size())).collect()
}

const CASES: usize = 100;

fn property_suites() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..CASES {
        let n = rng.gen_range(1..=9);
        let (p, s, t) = (random_perm(n, &mut rng), random_perm(n, &mut rng), random_perm(n, &mut rng));
        let d = p.distance(&s);
        ensure(d == t.then(&p).distance(&t.then(&s)) && d == p.then(&t).distance(&s.then(&t)), || {
            format!("bi-invariance fails for {p}, {s}, {t}")
        })?;
    }
    let s4 = SymmetricSpace::new(4).unwrap();
    let h42 = HammingSpace::new(4, 2).unwrap();
    let h32 = HammingSpace::new(3, 2).unwrap();
    fn sandwich<S: FiniteMetricSpace>(space: &S, code: &[usize]) -> (usize, usize, usize) {
        let r = remoteness(space, code).unwrap().0;
        let cr = covering_radius(space, code).unwrap();
        (r + cr, space_radius(space), space_diameter(space))
    }
    for _ in 0..CASES {
        let code = random_code(&s4, 8, &mut rng);
        let (sum, rho, delta) = sandwich(&s4, &code);
        ensure(rho <= sum && sum <= rho + delta, || format!("S4 sandwich fails for {code:?}"))?;
        let code = random_code(&h42, 8, &mut rng);
        let (sum, rho, delta) = sandwich(&h42, &code);
        ensure(rho <= sum && sum <= rho + delta, || format!("H(4,2) sandwich fails for {code:?}"))?;
        ensure(sum == rho, || format!("H(4,2) balanced equality fails for {code:?}"))?;
        let code = random_code(&h32, 5, &mut rng);
        let (sum, rho, _) = sandwich(&h32, &code);
        ensure(sum == rho, || format!("H(3,2) balanced equality fails for {code:?}"))?;
    }
    for _ in 0..CASES {
        let len = rng.gen_range(2..=10);
        let mut code: Vec<Permutation> = (0..len).map(|_| random_perm(5, &mut rng)).collect();
        code.sort_unstable();
        code.dedup();
        if code.len() < 2 {
            code.push(Permutation::identity(5));
            code.push(Permutation::standard_cycle(5));
        }
        let holds = strict_triangle_check(&code).unwrap();
        ensure(holds, || {
            let r = permutation_remoteness(&code).unwrap().0;
            let cr = permutation_covering_radius(&code).unwrap();
            format!("r + cr = {} for {code:?}", r + cr)
        })?;
    }
    for _ in 0..CASES {
        let (n1, n2) = (rng.gen_range(1..=3), rng.gen_range(1..=4));
        let c1: Vec<Permutation> = (0..rng.gen_range(1..=3)).map(|_| random_perm(n1, &mut rng)).collect();
        let c2: Vec<Permutation> = (0..rng.gen_range(1..=3)).map(|_| random_perm(n2, &mut rng)).collect();
        let product = cartesian_product(&c1, &c2).map_err(|e| e.to_string())?;
        let sum = permutation_remoteness(&c1).unwrap().0 + permutation_remoteness(&c2).unwrap().0;
        let r = permutation_remoteness(&product).unwrap().0;
        ensure(r == sum, || format!("r(C1 x C2) = {r}, r(C1) + r(C2) = {sum}"))?;
    }
    let mut groups = 0;
    for e in catalog().iter().filter(|e| e.degree <= 7) {
        let n = e.degree;
        let elements = e.group.elements().unwrap();
        let target = (n - 1) * elements.len();
        for p in all_permutations(n) {
            let total: usize = elements.iter().map(|g| p.distance(g)).sum();
            ensure(total == target, || format!("{}: average distance from {p} is not n-1", e.label()))?;
        }
        groups += 1;
    }
    Ok(format!("5 randomized suites x {CASES} cases; average distance exhaustive on {groups} groups"))
}

fn valency_formula() -> Outcome {
    let entries = catalog();
    for e in &entries {
        let graph = RemotenessGraph::build(&e.group).map_err(|err| err.to_string())?;
        let stats = graph_stats(&graph);
        ensure(stats.formula_valency().is_some(), || format!("{}: formula valency is not an integer", e.label()))?;
        ensure(stats.valency == stats.formula_valency(), || {
            format!("{}: valency {:?}, formula {:?}", e.label(), stats.valency, stats.formula_valency())
        })?;
    }
    let regular = [
        ("C4", Permutation::standard_cycle(4), None),
        ("V4", Permutation::parse("(0 1)(2 3)", Some(4)).unwrap(), Some(Permutation::parse("(0 2)(1 3)", Some(4)).unwrap())),
        ("C5", Permutation::standard_cycle(5), None),
    ];
    for (name, a, b) in regular {
        let n = a.degree();
        let gens = std::iter::once(a).chain(b).collect();
        let g = PermutationGroup::new(n, gens).unwrap();
        let stats = graph_stats(&RemotenessGraph::build(&g).unwrap());
        ensure(
            stats.vertices == n * n && stats.valency == Some(3 * (n - 1)) && stats.strongly_regular == Some((n, 6)),
            || format!("{name}: ({}, {:?}, {:?})", stats.vertices, stats.valency, stats.strongly_regular),
        )?;
    }
    Ok(format!("{} catalog graphs; C4, V4, C5 are srg(n^2, 3(n-1), n, 6)", entries.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("table reproduction and controls", table_reproduction),
        ("one-generator formula vs brute force", cyclic_formula),
        ("pair formula vs brute force over S6", pair_formula),
        ("cyclic-pair bound over S5", cyclic_pair_bound),
        ("Latin-square suite", latin_suite),
        ("bachelor extension at order 5", bachelor_extension),
        ("m-table at n = 4", m_table),
        ("triple equivalence on the catalog", triple_equivalence),
        ("property suites", property_suites),
        ("valency formula and Latin square graphs", valency_formula),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {name} ({detail}) [{secs:.2}s]", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2}: FAIL  {name}: {why} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
