#pragma once

#include <string>
#include <vector>

namespace registry_list {

// Every id the registry must carry, in report order.
inline const std::vector<std::string> kIds = {
    "S1.remark-interval", "S1.remark-tryrej", "S1.additivity", "S1.trad-epi", "S1.closures",
    "S2.example-z6", "S2.note-MN", "S2.prop-monotone", "S2.cor-intersection", "S2.lemma-tot",
    "S2.lemma-BJKNco.1v3", "S2.lemma-BJKNco.2v3", "S2.box-xi",
    "S3.note-fully-implies-cofirst", "S3.P-rad-cofirst", "S3.lemma-simple", "S3.lemma5", "S3.prop6",
    "S3.prop-pf", "S3.example-z", "S3.example-zp2",
    "S4.prop-pseudocomplement", "S4.thm-CNCNC", "S4.remark-conat", "S4.remark-cop8", "S4.prop-propPsig",
    "S4.remark-hat", "S4.cor-conatp", "S4.remark-antimorphism", "S4.prop-alpha-superfluous", "S4.cor-24",
    "S4.prop-vring", "S4.prop-8.3", "S4.prop-cftrad", "S4.lemma-coroL", "S4.prop-rid-trad",
    "S4.prop-propseudo", "S4.thm-ECNCUC", "S4.thm-MAXRing", "S4.lemma-tpcfq", "S4.thm-conatperfect1",
    "S4.cor-conatforleftperfect", "S4.cor-semilocal",
    "S5.remark-8s", "S5.tsvc1", "S5.example-ejemsvc", "S5.example-ejem4.17", "S5.prop-psvc1",
    "S5.prop-radsec", "S5.final-prop",
};

// Anchor keywords: each must occur in exactly one registry anchor.
inline const std::vector<std::string> kAnchorKeys = {
    "BJKNco (1)<=>(3)", "BJKNco (2)<=>(3)", "Lemma 5", "Proposition 6", "Proposition pf", "ejemcovtcf",
    "CNCNC", "remarkconat", "cop8", "propPsig", "conatp:", "Corollary 24", "Proposition 8.3", "cftrad",
    "coroL", "propseudo", "ECNCUC", "MAXRing", "tpcfq", "conatperfect1", "conatforleftperfect",
    "semilocal", "Remark 8s", "tsvc1", "ejemsvc", "ejem4.17", "psvc1", "radsec",
};

}  // namespace registry_list
