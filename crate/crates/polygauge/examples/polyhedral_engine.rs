//! The exact polyhedral engine underneath: LP with certificates, support
//! values, recession directions, vertex/ray enumeration, and positive-span
//! tests.
//!
//! Run with: cargo run --example polyhedral_engine

use polygauge::polyhedra::{
    enumerate_vrep, lp_solve, positively_spans, recession_direction, support_value, HPolyhedron,
    LpOutcome, Sense,
};
use polygauge::scalar::{format_vec, int};

fn show(outcome: &LpOutcome) -> String {
    match outcome {
        LpOutcome::Optimal { value, point } => format!(
            "optimal {} at {}",
            polygauge::scalar::format_rat(value),
            format_vec(point)
        ),
        LpOutcome::UnboundedAlong { ray } => format!("unbounded along {}", format_vec(ray)),
        LpOutcome::Infeasible => "infeasible".to_string(),
    }
}

fn main() -> polygauge::Result<()> {
    // the unit ball of max(|x1|, max(x2, 0)) on Q²
    let ball = HPolyhedron::new(
        2,
        vec![
            (vec![int(1), int(0)], int(1)),
            (vec![int(-1), int(0)], int(1)),
            (vec![int(0), int(1)], int(1)),
        ],
    )?;

    println!(
        "max x2 over the ball: {}",
        show(&lp_solve(&[int(0), int(1)], Sense::Max, &ball)?)
    );
    println!(
        "min x2 over the ball: {}",
        show(&lp_solve(&[int(0), int(1)], Sense::Min, &ball)?)
    );

    let (v, cert) = support_value(&ball, &[int(1), int(1)])?;
    println!("support of (1,1): {v} at {cert}");
    let (v, cert) = support_value(&ball, &[int(0), int(-1)])?;
    println!("support of (0,-1): {v} at {cert}");

    match recession_direction(&ball) {
        Some(d) => println!("recession direction: {}", format_vec(&d)),
        None => println!("recession direction: none"),
    }

    let vrep = enumerate_vrep(&ball)?;
    let rendered: Vec<String> = vrep.vertices.iter().map(|v| format_vec(v)).collect();
    println!("vertices: {}", rendered.join(" "));
    let rendered: Vec<String> = vrep.rays.iter().map(|r| format_vec(r)).collect();
    println!("extreme rays: {}", rendered.join(" "));

    // positive span: adding the missing direction closes the cone
    let three = vec![
        vec![int(1), int(0)],
        vec![int(-1), int(0)],
        vec![int(0), int(1)],
    ];
    let mut four = three.clone();
    four.push(vec![int(0), int(-1)]);
    println!(
        "three generators positively span Q²: {}",
        positively_spans(&three)
    );
    println!(
        "four generators positively span Q²: {}",
        positively_spans(&four)
    );
    Ok(())
}
