//! Serialization of library values into report JSON. Integers are emitted as
//! JSON numbers when they fit in 64 bits and as decimal strings otherwise;
//! rationals and scalars are always strings.

use serde_json::{json, Value};

use vancert_core::arith::{GaussRat, Int, IntVec};
use vancert_core::nondegeneracy::{FaceCheck, FailureWitness, SingularPoint};
use vancert_core::nonresonance::FacetCertificate;
use vancert_core::polytope::Face;
use vancert_core::LatticePolytope;

pub fn int_value(i: &Int) -> Value {
    match i64::try_from(i) {
        Ok(v) => json!(v),
        Err(_) => json!(i.to_string()),
    }
}

pub fn ivec_value(v: &IntVec) -> Value {
    Value::Array(v.0.iter().map(int_value).collect())
}

pub fn gauss_value(z: &GaussRat) -> Value {
    json!(z.to_string())
}

pub fn point_value(p: &[GaussRat]) -> Value {
    Value::Array(p.iter().map(gauss_value).collect())
}

pub fn face_value(face: &Face) -> Value {
    json!({
        "vertices": face.vertex_set,
        "dim": face.dim,
        "witness": ivec_value(&face.witness),
    })
}

pub fn polytope_value(p: &LatticePolytope) -> Value {
    json!({
        "ambient_dim": p.ambient_dim(),
        "dim": p.dim(),
        "vertices": p.vertices().iter().map(ivec_value).collect::<Vec<_>>(),
        "facets": p.facets().iter().map(|f| json!({
            "conormal": ivec_value(&f.conormal),
            "offset": int_value(&f.offset),
            "vertices": f.vertices,
        })).collect::<Vec<_>>(),
    })
}

pub fn witness_value(w: &FailureWitness) -> Value {
    match w {
        FailureWitness::ChartPoint(p) => json!({ "chart_point": point_value(p) }),
        FailureWitness::PositiveDimensional => json!({ "positive_dimensional": true }),
        FailureWitness::ResidualSystem(s) => json!({ "residual_system": s }),
    }
}

pub fn face_check_value(check: &FaceCheck) -> Value {
    json!({
        "face": face_value(&check.face),
        "part_faces": check.part_faces.iter().map(face_value).collect::<Vec<_>>(),
        "subset": check.subset,
        "essential_dim": check.essential_dim,
        "status": check.status.to_string(),
        "witness": check.witness.as_ref().map(witness_value),
    })
}

pub fn certificate_value(cert: &FacetCertificate) -> Value {
    json!({
        "generators_on": cert.generators_on,
        "conormal": ivec_value(&cert.conormal),
        "pairing": gauss_value(&cert.pairing),
        "resonant": cert.resonant,
        "delta_facet": cert.delta_facet.as_ref().map(|df| json!({
            "face": face_value(&df.face),
            "conormal": ivec_value(&df.conormal),
            "part_minima": df.part_minima.iter().map(int_value).collect::<Vec<_>>(),
            "boundary_order": gauss_value(&df.boundary_order),
        })),
    })
}

pub fn singular_point_value(sp: &SingularPoint) -> Value {
    match sp {
        SingularPoint::Exact(p) => json!({ "point": point_value(p) }),
        SingularPoint::Residual(desc) => json!({ "residual": desc }),
    }
}
