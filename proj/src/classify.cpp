#include "classify.hpp"

#include <algorithm>

namespace germcalc {

namespace {

std::string report_str(const CodimReport& r) {
  return r.bounded() ? std::to_string(*r.value) : "unbounded";
}

QMat image_d0(const MonoGerm& b) {
  QMat im;
  for (auto& col : b.jacobian_at_origin()) im.push_back(col);
  return span_basis(im);
}

// Per-branch reading of "g is transverse to V": every branch differential,
// together with V, must span the target.
bool multigerm_transverse_to(const MultiGerm& g, const QMat& V) {
  for (const MonoGerm& b : g.branches)
    if (!transverse_to_subspace(b, V)) return false;
  return true;
}

bool maps_transverse(const MultiGerm& f, const MultiGerm& g, int p) {
  for (const MonoGerm& fb : f.branches)
    for (const MonoGerm& gb : g.branches) {
      QMat rows = image_d0(fb);
      for (auto& r : image_d0(gb)) rows.push_back(r);
      if (rows.empty() || rank_q(rows) != p) return false;
    }
  return true;
}

std::string subspace_str(const QMat& basis, int p) {
  if (basis.empty()) return "{0}";
  std::string s;
  for (const auto& row : basis) {
    s += s.empty() ? "span{(" : ", (";
    for (int i = 0; i < p; ++i) {
      if (i) s += ",";
      s += rational_to_string(row[i]);
    }
    s += ")";
  }
  return s + "}";
}

std::string branches_str(const std::vector<int>& idx) {
  std::string s;
  for (int i : idx) {
    if (!s.empty()) s += ",";
    s += std::to_string(i + 1);
  }
  return s;
}

}  // namespace

const char* label_name(Codim2Label label) {
  switch (label) {
    case Codim2Label::Augmentation: return "AUGMENTATION";
    case Codim2Label::AugmentationAndConcatenation: return "AUGMENTATION_AND_CONCATENATION";
    case Codim2Label::PrimitiveMonogermPlusMorse: return "PRIMITIVE_MONOGERM_PLUS_MORSE";
    case Codim2Label::Special34: return "SPECIAL_34";
    case Codim2Label::MonicConcatenation: return "MONIC_CONCATENATION";
    case Codim2Label::GeneralisedConcatenation: return "GENERALISED_CONCATENATION";
    case Codim2Label::DoubleFoldConcatenation: return "DOUBLE_FOLD_CONCATENATION";
    case Codim2Label::SpecialP2: return "SPECIAL_P2";
    case Codim2Label::SpecialNadatrans: return "SPECIAL_NADATRANS";
  }
  return "?";
}

ClassifyResult classify_codim2(const MultiGerm& h, const JetOptions& opts) {
  h.validate();
  ClassifyResult out;
  out.total = ae_codim(h, opts);
  if (!out.total.bounded())
    throw PreconditionError("classify_codim2: ae-codimension did not stabilize");
  if (*out.total.value != 2)
    throw PreconditionError("classify_codim2: ae-codimension is " +
                            std::to_string(*out.total.value) + ", not 2");

  const int r = h.r();
  const int n = h.n(), p = h.p();
  if (r < 2) {
    out.notes.push_back(
        "monogerm input: the decision tree addresses two-part splits {f, g}");
    return out;
  }
  out.notes.push_back(
      "transversality of a multigerm to a subspace is evaluated per branch");

  // Enumerate ordered splits {f, g}.
  for (int mask = 1; mask < (1 << r) - 1; ++mask) {
    std::vector<int> fidx, gidx;
    for (int i = 0; i < r; ++i)
      (mask >> i & 1) ? fidx.push_back(i) : gidx.push_back(i);
    const MultiGerm f = h.select(fidx);
    const MultiGerm g = h.select(gidx);

    CodimReport cf = ae_codim(f, opts);
    CodimReport cg = ae_codim(g, opts);
    if (!cf.bounded() || !cg.bounded()) continue;

    SplitEvidence ev;
    ev.f_branches = fidx;
    ev.g_branches = gidx;
    ev.facts["cod(f)"] = report_str(cf);
    ev.facts["cod(g)"] = report_str(cg);

    if (*cf.value == 1 && f.r() == 1) {
      // Case 1: f a monogerm of codimension 1; g must be a prism on a Morse
      // function or an immersion.
      if (*cg.value != 0 || g.r() != 1) {
        out.notes.push_back("split {" + branches_str(fidx) + "|" + branches_str(gidx) +
                            "}: cod(f)=1 but g is not a stable monogerm");
        continue;
      }
      TauTilde tg = tau_tilde(g, opts);
      const bool g_morse_or_immersion =
          (p - tg.dim() == 1) && subspace_equal(image_d0(g.branches[0]), tg.basis, p);
      ev.facts["g prism-on-Morse/immersion"] = g_morse_or_immersion ? "yes" : "no";
      if (!g_morse_or_immersion) {
        out.notes.push_back("split {" + branches_str(fidx) + "|" + branches_str(gidx) +
                            "}: g is not a prism on a Morse function or an immersion");
        continue;
      }
      if (n > p) {
        out.notes.push_back("split {" + branches_str(fidx) + "|" + branches_str(gidx) +
                            "}: n > p needs the corank-1 multiplicity reduction; "
                            "not decided automatically");
        continue;
      }
      CodimReport m0 = multiplicity(f.branches[0], opts);
      if (!m0.bounded()) continue;
      const long m = *m0.value;
      ev.facts["m0(f)"] = std::to_string(m);
      long threshold;
      if (n >= p) {
        threshold = p;
        ev.facts["threshold"] = "p = " + std::to_string(p);
      } else if (p == n + 1) {
        threshold = n / 2;
        ev.facts["threshold"] = "[n/2] = " + std::to_string(threshold);
      } else {
        out.notes.push_back("split {" + branches_str(fidx) + "|" + branches_str(gidx) +
                            "}: dimensions (n,p) outside n >= p-1");
        continue;
      }
      if (n == 3 && p == 4 && m == 3) {
        ev.label = Codim2Label::Special34;
        ev.case_id = "1.iv";
      } else if (m <= threshold) {
        ev.label = Codim2Label::Augmentation;
        ev.case_id = "1.i";
      } else if (m == threshold + 1) {
        ev.label = Codim2Label::AugmentationAndConcatenation;
        ev.case_id = "1.ii";
      } else if (m == threshold + 2 && (p == 1 || p == 2)) {
        ev.label = Codim2Label::PrimitiveMonogermPlusMorse;
        ev.case_id = "1.iii";
      } else {
        out.notes.push_back("split {" + branches_str(fidx) + "|" + branches_str(gidx) +
                            "}: multiplicity " + std::to_string(m) +
                            " matches no codimension-1-branch case");
        continue;
      }
      out.labels.push_back(std::move(ev));
      continue;
    }

    if (*cf.value == 0 && *cg.value == 0) {
      // Case 2: both parts stable.
      TauTilde tf = tau_tilde(f, opts);
      TauTilde tg = tau_tilde(g, opts);
      const int cod_tf = p - tf.dim(), cod_tg = p - tg.dim();
      const int arog = almost_regular_order({tf.basis, tg.basis}, p);
      ev.facts["tau(f)"] = subspace_str(tf.basis, p);
      ev.facts["tau(g)"] = subspace_str(tg.basis, p);
      ev.facts["cod tau(f) + cod tau(g)"] = std::to_string(cod_tf + cod_tg);
      ev.facts["almost regular order"] = std::to_string(arog);

      const bool has_1psu = (arog == 1);
      ev.facts["has 1-parameter stable unfolding"] = has_1psu ? "yes" : "no";
      if (has_1psu && cod_tf + cod_tg <= p) {
        ev.label = Codim2Label::Augmentation;
        ev.case_id = "2.i";
        out.labels.push_back(std::move(ev));
        continue;
      }

      // Primitive from here on.
      const bool g_trans_tauf = multigerm_transverse_to(g, tf.basis);
      ev.facts["g transverse to tau(f)"] = g_trans_tauf ? "yes" : "no";
      if (!g_trans_tauf) {
        const bool fg_trans = maps_transverse(f, g, p);
        ev.facts["f transverse to g"] = fg_trans ? "yes" : "no";
        if (fg_trans) {
          if (g.r() == 1) {
            const QMat img = image_d0(g.branches[0]);
            const bool img_equals_taug = subspace_equal(img, tg.basis, p);
            ev.facts["Im(dg_0) = tau(g)"] = img_equals_taug ? "yes" : "no";
            if (img_equals_taug) {
              ev.label = Codim2Label::MonicConcatenation;
              ev.case_id = "2.ii.a1";
            } else if (p == 2 && n >= 2 && cod_tf == 2 && cod_tg == 2) {
              ev.label = Codim2Label::SpecialP2;
              ev.case_id = "2.ii.a1";
            } else {
              ev.label = Codim2Label::GeneralisedConcatenation;
              ev.case_id = "2.ii.a1";
            }
          } else {
            if (p == 2 && n >= 2) {
              ev.label = Codim2Label::SpecialP2;
              ev.case_id = "2.ii.a2";
            } else {
              ev.label = Codim2Label::DoubleFoldConcatenation;
              ev.case_id = "2.ii.a2";
            }
          }
        } else {
          if (p == 2 && n >= 2 && ((cod_tf == 1 && cod_tg == 2) || (cod_tf == 2 && cod_tg == 1))) {
            ev.label = Codim2Label::SpecialP2;
            ev.case_id = "2.ii.b";
          } else if (p == n + 1 && n % 2 == 0) {
            ev.label = Codim2Label::SpecialNadatrans;
            ev.case_id = "2.ii.b";
            ev.facts["matched"] = "structurally, by dimensions and strata";
          } else {
            ev.label = Codim2Label::AugmentationAndConcatenation;
            ev.case_id = "2.ii.b";
          }
        }
        out.labels.push_back(std::move(ev));
        continue;
      }

      const bool f_trans_taug = multigerm_transverse_to(f, tg.basis);
      ev.facts["f transverse to tau(g)"] = f_trans_taug ? "yes" : "no";
      if (g_trans_tauf && f_trans_taug) {
        ev.label = Codim2Label::GeneralisedConcatenation;
        ev.case_id = "2.iii";
        out.labels.push_back(std::move(ev));
        continue;
      }
      // g transverse to tau(f) but f not transverse to tau(g): the mirrored
      // split handles it.
      continue;
    }
  }

  if (out.labels.empty())
    out.notes.push_back("no split matched a case of the decision tree");
  return out;
}

}  // namespace germcalc
