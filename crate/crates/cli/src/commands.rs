use coordcut::encodings::{
    encode_directed_max_cut, encode_eulerian_closeness, encode_max_avg_degree_decision, encode_max_cut,
    encode_min_st_cut, encode_two_color_difference, encode_two_color_partition, max_density_subgraph, EncodedProblem,
};
use coordcut::formats::{
    parse_colored_graph, parse_game, parse_hypergraph, parse_instance, parse_json, parse_threshold, to_json, GraphFile,
    InstanceFile, ThresholdInput,
};
use coordcut::polymatrix::{
    classify_game, is_pure_nash, maximize_potential, maximize_welfare, welfare_mwdp, welfare_optimal_nash_exact,
    PolymatrixGame,
};
use coordcut::rational::{format_rational, parse_rational, Q};
use coordcut::threshold::{
    best_response_search, build_hitting_set_gadget, nash_ratio_check, to_polymatrix, welfare_optimal_nash,
    ThresholdGame, ThresholdMethod, ThresholdSolution,
};
use coordcut::{classify_family, solve, FamilyTag, MwdpInstance, Partition, SolvePolicy};
use serde_json::json;

use crate::cli::{Command, Common, Problem};
use crate::report::{matrix_label, Picture, Report};
use crate::CliError;

/// What a command produced: a report, or a ready-made document.
pub enum Output {
    Report(Box<Report>),
    Raw(String),
}

fn policy(c: &Common) -> SolvePolicy {
    SolvePolicy { budget: c.budget, restarts: c.restarts, seed: c.seed }
}

fn instance_picture(inst: &MwdpInstance, p: Option<&Partition>) -> Picture {
    Picture {
        directed: true,
        n: inst.n(),
        edges: inst.arcs().map(|(u, v, d)| (u, v, matrix_label(&d.c, &d.m))).collect(),
        sides: p.map(|p| p.sides().to_vec()),
    }
}

fn game_picture(g: &PolymatrixGame, p: Option<&Partition>) -> Picture {
    Picture {
        directed: false,
        n: g.n(),
        edges: g.graph().edges().iter().map(|&(u, v)| (u, v, String::new())).collect(),
        sides: p.map(|p| p.sides().to_vec()),
    }
}

pub fn run(command: &Command, common: &Common, input: &str) -> Result<Output, CliError> {
    let seed = common.seed;
    let report = match command {
        Command::Solve => {
            let inst = parse_instance(input)?;
            let out = solve(&inst, &policy(common))?;
            Report::new("solve", out.method, out.exact, seed)
                .value(out.value)
                .partition(&out.partition)
                .detail("family", classify_family(&inst).tag)
                .detail("n", inst.n())
                .detail("arcs", inst.digraph().arc_count())
                .picture(instance_picture(&inst, Some(&out.partition)))
        }
        Command::Classify => classify(input, common)?,
        Command::GameWelfare => {
            let g = parse_game(input)?;
            let sol = maximize_welfare(&g, &policy(common))?;
            let nash = is_pure_nash(&g, &sol.profile)?;
            let family = classify_family(&welfare_mwdp(&g)?.instance).tag;
            let p = sol.profile.to_partition();
            Report::new("game-welfare", sol.method, sol.exact, seed)
                .value(sol.value)
                .profile(&sol.profile)
                .detail("class", classify_game(&g).tag)
                .detail("family", family)
                .detail("is_nash", nash.is_nash)
                .picture(game_picture(&g, Some(&p)))
        }
        Command::GamePotential => {
            let g = parse_game(input)?;
            let sol = maximize_potential(&g, &policy(common))?;
            let nash = is_pure_nash(&g, &sol.profile)?;
            let p = sol.profile.to_partition();
            Report::new("game-potential", sol.method, sol.exact, seed)
                .value(sol.value)
                .profile(&sol.profile)
                .detail("class", classify_game(&g).tag)
                .detail("is_nash", nash.is_nash)
                .picture(game_picture(&g, Some(&p)))
        }
        Command::ThresholdNe => threshold(input, common)?,
        Command::Encode { problem, emit_instance } => {
            let enc = encode(*problem, input)?;
            if *emit_instance {
                return Ok(Output::Raw(to_json(&InstanceFile::from_instance(&enc.instance))));
            }
            let out = solve(&enc.instance, &policy(common))?;
            let dec = enc.decode(&out)?;
            let mut r = Report::new("encode", dec.method, dec.exact, seed)
                .value(dec.value)
                .partition(&dec.partition)
                .detail("problem", dec.kind)
                .detail("family", classify_family(&enc.instance).tag)
                .detail("mwdp_value", Q(out.value));
            if enc.kind == coordcut::encodings::ProblemKind::MaxAverageDegree {
                r = r.detail("exists", dec.set.is_some());
            }
            if let Some(set) = &dec.set {
                r = r.detail("set", set);
            }
            r.picture(instance_picture(&enc.instance, Some(&out.partition)))
        }
        Command::Density => {
            let file: GraphFile = parse_json(input)?;
            let g = file.undirected()?;
            let d = max_density_subgraph(&g, &policy(common))?;
            let inside = Partition::from_x1(g.n(), (0..g.n()).filter(|v| !d.set.contains(v)));
            Report::new("density", "BinarySearch", true, seed)
                .value(d.density)
                .partition(&inside)
                .detail("set", &d.set)
                .detail("queries", d.queries)
                .picture(Picture {
                    directed: false,
                    n: g.n(),
                    edges: g.edges().iter().map(|&(u, v)| (u, v, String::new())).collect(),
                    sides: Some(inside.sides().to_vec()),
                })
        }
        Command::Gadget { gamma_a, gamma_b } => gadget(input, common, gamma_a, gamma_b)?,
    };
    Ok(Output::Report(Box::new(report)))
}

fn classify(input: &str, common: &Common) -> Result<Report, CliError> {
    let inst = parse_instance(input)?;
    let class = classify_family(&inst);
    let (method, exact) = match class.tag {
        FamilyTag::AllB => ("TrivialAllX1", true),
        FamilyTag::AllC => ("TrivialAllX2", true),
        FamilyTag::AllA => ("MinCut", true),
        FamilyTag::Hard if inst.n() <= common.budget => ("Exact", true),
        FamilyTag::Hard => ("LocalSearch", false),
    };
    let mut arcs = Vec::new();
    let mut notes = Vec::new();
    for (i, ((u, v, d), f)) in inst.arcs().zip(&class.flags).enumerate() {
        let mut violated = Vec::new();
        if !f.a {
            violated.push("a: m11 + m22 >= m12 + m21");
        }
        if !f.b {
            violated.push("b: m11 is a maximum entry");
        }
        if !f.c {
            violated.push("c: m22 is a maximum entry");
        }
        let mark = |ok: bool| if ok { "yes" } else { "NO" };
        notes.push(format!(
            "arc {i} ({u} -> {v}) {}: a {} b {} c {}",
            matrix_label(&d.c, &d.m),
            mark(f.a),
            mark(f.b),
            mark(f.c)
        ));
        arcs.push(json!({ "arc": i, "tail": u, "head": v, "a": f.a, "b": f.b, "c": f.c, "violated": violated }));
    }
    let verdict = if class.tag.is_tractable() { "polynomial" } else { "NP-hard family" };
    let mut r = Report::new("classify", method, exact, common.seed)
        .detail("verdict", class.tag)
        .detail("complexity", verdict)
        .detail("all_a", class.all_a)
        .detail("all_b", class.all_b)
        .detail("all_c", class.all_c)
        .detail("arc_properties", arcs)
        .picture(instance_picture(&inst, None));
    r.notes.extend(notes);
    Ok(r)
}

fn threshold(input: &str, common: &Common) -> Result<Report, CliError> {
    let parsed = parse_threshold(input)?;
    let tg = parsed.game();
    let sol = match &parsed {
        ThresholdInput::TwoType(tt) => welfare_optimal_nash(tt, common.budget, common.seed)?,
        ThresholdInput::General(g) => general_threshold(g, common)?,
    };
    let nash = nash_ratio_check(&tg, &sol.profile)?;
    let p = sol.profile.to_partition();
    let mut r = Report::new("threshold-ne", sol.method, sol.exact, common.seed)
        .value(sol.welfare)
        .profile(&sol.profile)
        .detail("is_nash", nash)
        .picture(game_picture(&to_polymatrix(&tg), Some(&p)));
    if let ThresholdInput::TwoType(tt) = &parsed {
        r = r.detail("case", sol.case).detail("gamma_A", Q(tt.gamma_a())).detail("gamma_B", Q(tt.gamma_b()));
    }
    if let Some(a) = &sol.audit {
        let line = format!(
            "wel = 2|E| - |E(A,B)| - cut = 2*{} - {} - {} = {}",
            a.edges,
            a.cross_edges,
            format_rational(&a.cut),
            format_rational(&a.welfare())
        );
        r = r
            .detail(
                "audit",
                json!({
                    "edges": a.edges,
                    "cross_edges": a.cross_edges,
                    "cut": Q(a.cut),
                    "welfare": Q(a.welfare()),
                    "identity": line,
                }),
            )
            .note(line);
    }
    r.warnings.extend(sol.warning);
    Ok(r)
}

/// Threshold games with arbitrary per-player thresholds: exhaustive within
/// the budget, best-response dynamics beyond it.
fn general_threshold(g: &ThresholdGame, common: &Common) -> Result<ThresholdSolution, CliError> {
    if g.n() <= common.budget {
        let (profile, welfare) = welfare_optimal_nash_exact(&to_polymatrix(g), common.budget)?
            .expect("threshold games always have a pure Nash equilibrium");
        return Ok(ThresholdSolution {
            profile,
            welfare,
            method: ThresholdMethod::Exact,
            exact: true,
            case: 4,
            audit: None,
            warning: None,
        });
    }
    let (profile, welfare) = best_response_search(g, common.restarts, common.seed)?;
    Ok(ThresholdSolution {
        profile,
        welfare,
        method: ThresholdMethod::BestResponse,
        exact: false,
        case: 4,
        audit: None,
        warning: Some(format!(
            "{} players exceed the exact budget of {}; returning the best equilibrium found by best-response dynamics",
            g.n(),
            common.budget
        )),
    })
}

fn encode(problem: Problem, input: &str) -> Result<EncodedProblem, CliError> {
    let enc = match problem {
        Problem::TwoColorPartition => encode_two_color_partition(&parse_colored_graph(input)?)?,
        Problem::TwoColorDifference => encode_two_color_difference(&parse_colored_graph(input)?)?,
        _ => {
            let file: GraphFile = parse_json(input)?;
            match problem {
                Problem::MaxCut => encode_max_cut(&file.undirected()?)?,
                Problem::DirectedMaxCut => encode_directed_max_cut(&file.directed()?)?,
                Problem::EulerianCloseness => encode_eulerian_closeness(&file.directed()?)?,
                Problem::MinStCut => {
                    let (pairs, directed) = file.pairs()?;
                    let (s, t) = file.terminals()?;
                    encode_min_st_cut(file.n, &pairs, directed, s, t)?
                }
                Problem::MaxAvgDegree => {
                    let k = file.k.ok_or_else(|| coordcut::Error::Parse {
                        path: "k".into(),
                        message: "missing field `k`".into(),
                    })?;
                    encode_max_avg_degree_decision(&file.undirected()?, k.0)?
                }
                Problem::TwoColorPartition | Problem::TwoColorDifference => unreachable!(),
            }
        }
    };
    Ok(enc)
}

fn gadget(input: &str, common: &Common, gamma_a: &str, gamma_b: &str) -> Result<Report, CliError> {
    let h = parse_hypergraph(input)?;
    let (ga, gb) = (parse_rational(gamma_a)?, parse_rational(gamma_b)?);
    let gadget = build_hitting_set_gadget(&h, ga, gb)?;
    let traversal = h.minimum_traversal(common.budget)?;
    let profile = gadget.g_extension(&traversal)?;
    let claimed = gadget.claim_d_welfare(&traversal)?;
    let direct = gadget.welfare(&profile)?;
    let nash = gadget.nash_ratio_check(&profile)?;
    let recovered = gadget.traversal_from_welfare(direct);
    let constants = gadget.constants();
    let mut r = Report::new("gadget", "Exact", true, common.seed)
        .value(direct)
        .profile(&profile)
        .detail("constants", constants)
        .detail("violations", constants.violations(&h, ga, gb))
        .detail("vertex_count", gadget.vertex_count())
        .detail("edge_count", gadget.edge_count())
        .detail("w_star", Q(gadget.w_star()))
        .detail("traversal", &traversal)
        .detail("claimed_welfare", Q(claimed))
        .detail("is_nash", nash)
        .detail("recovered_traversal_size", recovered)
        .note(format!(
            "minimum traversal {traversal:?}: equilibrium welfare {} recovers size {recovered}",
            format_rational(&direct)
        ));
    if claimed != direct {
        r.warnings.push(format!(
            "closed-form welfare {} differs from the evaluated welfare {}",
            format_rational(&claimed),
            format_rational(&direct)
        ));
    }
    Ok(r)
}
