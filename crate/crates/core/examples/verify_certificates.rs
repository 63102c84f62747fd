//! Checking certificates without the solver: a valid one, a broken one, and
//! the JSON round trip.

use indsub::certificates::{verify_stable, CertificateBody, ClaimedMode, DerivedConstants};
use indsub::{verify_subdivision, Certificate, Graph, StableSetCertificate};

const C9: &str = r#"{"type":"subdivision","n":9,"params":{"k":2,"t":3,"d":2,"mode":"planted"},"branch":[0,3,6],
"paths":[{"pair":[0,1],"vertices":[1,2]},{"pair":[0,2],"vertices":[8,7]},{"pair":[1,2],"vertices":[4,5]}]}"#;

fn main() {
    let cert = Certificate::from_json(C9).expect("well-formed certificate");
    let CertificateBody::Subdivision(sub) = &cert.body else { unreachable!() };

    let cycle = Graph::cycle(9);
    println!("on C9: {:?}", verify_subdivision(&cycle, sub));

    let chord = Graph::new(9, cycle.edges().chain([(1, 4)])).expect("valid graph");
    for v in verify_subdivision(&chord, sub).violations {
        println!("with chord 1-4: {v}");
    }

    let consts = DerivedConstants::for_graph(9, 2, 3, 2).expect("valid parameters");
    let stable = StableSetCertificate::new([0, 2, 4, 6], ClaimedMode::Faithful);
    println!("{:?}", verify_stable(&cycle, &stable, &consts).expect("ids in range"));
    println!("{}", cert.to_json());
}
