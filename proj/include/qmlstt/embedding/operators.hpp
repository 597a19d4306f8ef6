#pragma once

#include <string>
#include <vector>

#include "qmlstt/errors.hpp"
#include "qmlstt/stt/term.hpp"
#include "qmlstt/stt/type.hpp"

namespace qmlstt::embedding {

// The lifted connectives.  A formula embeds to a term of type mu > o (a set
// of worlds); each connective is a constant with a closed definiens that
// manipulates such sets.  The first thirteen are part of the emitted THF
// vocabulary; the last four (difference modality, global modality,
// uniqueness, shift-to-world) are available to terms but stay internal.
struct OperatorDef {
  std::string name;
  stt::TypeRef type;
  stt::TermRef definiens;
  bool in_thf;
};

inline const std::vector<OperatorDef>& operator_table() {
  using namespace stt;
  static const std::vector<OperatorDef> table = [] {
    TypeRef o = Type::o();
    TypeRef mu = Type::mu();
    TypeRef io = Type::iota();
    TypeRef p = prop_type();            // mu > o
    TypeRef r = rel_type();             // mu > mu > o
    TypeRef pp = Type::arrow(p, p);
    TypeRef ip = Type::arrow(io, p);

    auto cst = [](const char* n, TypeRef t) { return constant(n, t); };
    TermRef Phi = variable("Phi", p);
    TermRef Psi = variable("Psi", p);
    TermRef W = variable("W", mu);
    TermRef V = variable("V", mu);

    std::vector<OperatorDef> t;

    // mnot = ^Phi ^W. ~(Phi W)
    t.push_back({"mnot", Type::arrow(p, p),
                 lam("Phi", p, lam("W", mu, neg(app(Phi, W)))), true});

    // mor = ^Phi ^Psi ^W. (Phi W) | (Psi W)
    t.push_back({"mor", Type::arrow(p, Type::arrow(p, p)),
                 lam("Phi", p,
                     lam("Psi", p, lam("W", mu, disj(app(Phi, W), app(Psi, W))))),
                 true});

    // mbox = ^R ^Phi ^W. ![V:mu]: ~(R W V) | (Phi V)
    {
      TermRef R = variable("R", r);
      t.push_back({"mbox", Type::arrow(r, Type::arrow(p, p)),
                   lam("R", r,
                       lam("Phi", p,
                           lam("W", mu,
                               forall("V", mu,
                                      disj(neg(app(R, {W, V})), app(Phi, V)))))),
                   true});
    }

    // mforall_ind = ^Phi ^W. ![X:$i]: Phi X W
    {
      TermRef PhiI = variable("Phi", ip);
      TermRef X = variable("X", io);
      t.push_back({"mforall_ind", Type::arrow(ip, p),
                   lam("Phi", ip,
                       lam("W", mu, forall("X", io, app(PhiI, {X, W})))),
                   true});
    }

    // mforall_prop = ^Phi ^W. ![P:mu>o]: Phi P W
    {
      TermRef PhiP = variable("Phi", pp);
      TermRef P = variable("P", p);
      t.push_back({"mforall_prop", Type::arrow(pp, p),
                   lam("Phi", pp,
                       lam("W", mu, forall("P", p, app(PhiP, {P, W})))),
                   true});
    }

    // mtrue = mforall_prop (^P. mor P (mnot P))
    {
      TermRef P = variable("P", p);
      t.push_back({"mtrue", p,
                   app(cst("mforall_prop", Type::arrow(pp, p)),
                       lam("P", p,
                           app(cst("mor", Type::arrow(p, Type::arrow(p, p))),
                               {P, app(cst("mnot", Type::arrow(p, p)), P)}))),
                   true});
    }

    // mfalse = mnot mtrue
    t.push_back({"mfalse", p,
                 app(cst("mnot", Type::arrow(p, p)), cst("mtrue", p)), true});

    // mand = ^Phi ^Psi. mnot (mor (mnot Phi) (mnot Psi))
    {
      TermRef mnotC = cst("mnot", Type::arrow(p, p));
      TermRef morC = cst("mor", Type::arrow(p, Type::arrow(p, p)));
      t.push_back({"mand", Type::arrow(p, Type::arrow(p, p)),
                   lam("Phi", p,
                       lam("Psi", p,
                           app(mnotC,
                               app(morC, {app(mnotC, Phi), app(mnotC, Psi)})))),
                   true});
      // mimplies = ^Phi ^Psi. mor (mnot Phi) Psi
      t.push_back({"mimplies", Type::arrow(p, Type::arrow(p, p)),
                   lam("Phi", p, lam("Psi", p, app(morC, {app(mnotC, Phi), Psi}))),
                   true});
    }

    // mdia = ^R ^Phi. mnot (mbox R (mnot Phi))
    {
      TermRef R = variable("R", r);
      TermRef mnotC = cst("mnot", Type::arrow(p, p));
      TermRef mboxC = cst("mbox", Type::arrow(r, Type::arrow(p, p)));
      t.push_back({"mdia", Type::arrow(r, Type::arrow(p, p)),
                   lam("R", r,
                       lam("Phi", p, app(mnotC, app(mboxC, {R, app(mnotC, Phi)})))),
                   true});
    }

    // mexists_ind = ^Phi. mnot (mforall_ind (^X. mnot (Phi X)))
    {
      TermRef PhiI = variable("Phi", ip);
      TermRef X = variable("X", io);
      TermRef mnotC = cst("mnot", Type::arrow(p, p));
      t.push_back({"mexists_ind", Type::arrow(ip, p),
                   lam("Phi", ip,
                       app(mnotC,
                           app(cst("mforall_ind", Type::arrow(ip, p)),
                               lam("X", io, app(mnotC, app(PhiI, X)))))),
                   true});
    }

    // mexists_prop = ^Phi. mnot (mforall_prop (^P. mnot (Phi P)))
    {
      TermRef PhiP = variable("Phi", pp);
      TermRef P = variable("P", p);
      TermRef mnotC = cst("mnot", Type::arrow(p, p));
      t.push_back({"mexists_prop", Type::arrow(pp, p),
                   lam("Phi", pp,
                       app(mnotC,
                           app(cst("mforall_prop", Type::arrow(pp, p)),
                               lam("P", p, app(mnotC, app(PhiP, P)))))),
                   true});
    }

    // mvalid = ^Phi. ![W:mu]: Phi W
    t.push_back({"mvalid", Type::arrow(p, o),
                 lam("Phi", p, forall("W", mu, app(Phi, W))), true});

    // mdiff = ^Phi ^W. ?[V:mu]: ~(W = V) & Phi V   (somewhere else)
    {
      auto conj2 = [](TermRef a, TermRef b) { return neg(disj(neg(a), neg(b))); };
      t.push_back({"mdiff", Type::arrow(p, p),
                   lam("Phi", p,
                       lam("W", mu,
                           neg(forall("V", mu,
                                      neg(conj2(neg(equal(W, V, mu)), app(Phi, V))))))),
                   false});
    }

    // mglobal = ^Phi. mor Phi (mdiff Phi)   (here or somewhere else)
    {
      TermRef morC = cst("mor", Type::arrow(p, Type::arrow(p, p)));
      TermRef mdiffC = cst("mdiff", Type::arrow(p, p));
      t.push_back({"mglobal", Type::arrow(p, p),
                   lam("Phi", p, app(morC, {Phi, app(mdiffC, Phi)})), false});

      // munique = ^Phi. mglobal (mand Phi (mnot (mdiff Phi)))
      t.push_back({"munique", Type::arrow(p, p),
                   lam("Phi", p,
                       app(cst("mglobal", Type::arrow(p, p)),
                           app(cst("mand", Type::arrow(p, Type::arrow(p, p))),
                               {Phi,
                                app(cst("mnot", Type::arrow(p, p)),
                                    app(mdiffC, Phi))}))),
                   false});
    }

    // mat = ^W ^Phi. Phi W   (truth shifted to a named world)
    t.push_back({"mat", Type::arrow(mu, Type::arrow(p, o)),
                 lam("W", mu, lam("Phi", p, app(Phi, W))), false});

    return t;
  }();
  return table;
}

inline const OperatorDef* find_operator(const std::string& name) {
  for (const auto& d : operator_table())
    if (d.name == name) return &d;
  return nullptr;
}

inline stt::TermRef operator_const(const std::string& name) {
  const OperatorDef* d = find_operator(name);
  if (!d) throw UnknownDefinition(name);
  return stt::constant(d->name, d->type);
}

}  // namespace qmlstt::embedding
