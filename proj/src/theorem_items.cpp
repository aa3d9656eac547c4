#include "theorem_items.hpp"

namespace lienil::detail {

const std::vector<ItemRow>& theorem_items() {
    static const std::vector<ItemRow> rows{
        {1, "p=7", nullptr, "G'=C49xC7^2 and g3<=G'^7", nullptr,
         "",
         R"($G'\cong C_{7^{2}}\times (C_{7})^{2}$ and $\gamma_{3}(G) \subseteq G'^{7}$)"},
        {2, "p=7", nullptr, "G'=C49xC7 and g3=C7 and |G'^7&g3|=1", nullptr,
         "",
         R"($ G'\cong C_{7^{2}}\times C_{7}$, $\gamma_{3}(G)\cong C_{7}$ and $|\gamma_{3}(G)\cap G'^{7}| = 1$)"},
        {3, "p=7", nullptr, "G'=C49xC7 and g4<=G'^7 and G'^7<=g3 and g3=C7^2 and g5=1", nullptr,
         "",
         R"($G'\cong C_{7^{2}}\times C_{7}$, $\gamma_{4}(G) \subseteq G'^{7}\subseteq \gamma_{3}(G)\cong (C_{7})^{2}$ and $\gamma_{5}(G) = 1$)"},
        {4, "p=5", nullptr, "G'=C25xC5^4 and G'^5<=g3 and g4=1", nullptr,
         "",
         R"($G'\cong C_{5^{2}}\times (C_{5})^{4} $, $G'^{5}\subseteq \gamma_{3}(G)$ and $\gamma_{4}(G) = 1$)"},
        {5, "p=5", nullptr, "G'=C5^6 and |G'^5&g3|=1 and g3=C5 and g4=1", nullptr,
         "",
         R"($G'\cong (C_{5})^{6}$, $|G'^{5}\cap \gamma_{3}(G)| =1$, $\gamma_{3}(G)\cong C_{5}$ and $\gamma_{4}(G) = 1$)"},
        {6, "p=5", nullptr, "G'=C25^2xC5 and g3<=G'^2", "G'=C25^2xC5 and g3<=G'^5",
         "G'^2 = G' when p = 5, so the literal containment is vacuous; corrected to G'^5",
         R"($G'\cong (C_{5^2})^{2} \times C_{5}$ and $\gamma_{3}(G)\subseteq G'^{2}$)"},
        {7, "p=5", nullptr, "G'=C25xC5^3 and ((|G'^5&g3|=1 and g3=C5) or (G'^5<=g3 and g3=C5^2))", nullptr,
         "",
         R"($G'\cong C_{5^2}\times (C_{5})^{3}$, either $|G'^{5}\cap \gamma_{3}(G)| = 1$, $\gamma_{3}(G)\cong C_{5}$ or $G'^{5}\subseteq \gamma_{3}(G)\cong (C_{5})^{2}$)"},
        {8, "p=5", nullptr, "G'=C5^5 and |G'^5&g3|=1 and g3=C5^2 and g4=1", nullptr,
         "",
         R"($G'\cong (C_{5})^{5}$, $|G'^{5}\cap \gamma_{3}(G)| = 1$, $\gamma_{3}(G)\cong (C_{5})^{2}$ and $\gamma_{4}(G)= 1$)"},
        {9, "p=5", nullptr, "G'in:3125:2,40-44,73,74 and G'^5<=Z' and G''<=Z' and G'^5<=g3 and g3=C5^2 and g4=C5 and g5=1", nullptr,
         "",
         R"($G'$ is one of the groups $S(3125,2)$, $S(3125,40)$, $S(3125,41)$, $S(3125,42)$, $S(3125,43)$, $S(3125,44)$, $S(3125,73)$ or $S(3125,74)$, $G'^{5}\subseteq \zeta(G')$, $G''\subseteq \zeta(G')$, $G'^{5}\subseteq \gamma_{3}(G)\cong (C_{5})^{2}$, $\gamma_{4}(G) \cong C_{5}$ and $\gamma_{5}(G)= 1$)"},
        {10, "p=5", nullptr, "G'=C25xC5^2 and ((|G'^5&g3|=1 and g3=C5^2) or (G'^5==g3 and g3=C5) or (G'^5<=g3 and g3=C5^3))", nullptr,
         "",
         R"($G'\cong C_{5^2}\times (C_{5})^{2}$, either $|G'^{5}\cap \gamma_{3}(G)| = 1$, $\gamma_{3}(G)\cong (C_{5})^{2}$ or $G'^{5}= \gamma_{3}(G)\cong C_{5}$ or $G'^{5} \subseteq \gamma_{3}(G)\cong (C_{5})^{3}$)"},
        {11, "p=2", nullptr, "G'=C8xC2^3 and g3<=G'^2 and g3=C4 and g4=1", nullptr,
         "",
         R"($G'\cong C_{8}\times (C_{2})^{3}$, $\gamma_{3}(G)\subseteq G'^{2}$, $\gamma_{3}(G)\cong C_{4}$ and $\gamma_{4}(G)= 1$)"},
        {12, "p=2", nullptr, "G'=C4^2xC2^2 and g3<=G'^2 and g4=1", nullptr,
         "",
         R"($G'\cong (C_{4})^{2} \times (C_{2})^{2}$, $\gamma_{3}(G)\subseteq G'^{2}$ and $\gamma_{4}(G)= 1$)"},
        {13, "p=2", nullptr, "G'=C4xC2^4 and G'^2<=g3 and g3=C4 and g4=1", nullptr,
         "",
         R"($G'\cong C_{4}\times (C_{2})^{4}$, $G'^{2}\subseteq \gamma_{3}(G)\cong C_{4}$ and $\gamma_{4}(G) =1$)"},
        {14, "p=2", nullptr, "G'in:64:199-201,215-245 and g3<=G'^2 and g4=C2", nullptr,
         "",
         R"($G'$ is one of the groups $S(64,199)$ to $S(64,201)$ or $S(64,215)$ to $S(64,245)$, $\gamma_{3}(G)\subseteq G'^{2}$ and $\gamma_{4}(G)\cong C_{2}$)"},
        {15, "p=2", nullptr, "G'in:64:264,265 and ((G'^2<=g3 and g3=C4) or (|G'^2&g3|=1 and g3=C2))", nullptr,
         "",
         R"($G'$ is one of the groups $S(64,264)$ or $S(64,265)$, either $G'^{2}\subseteq \gamma_{3}(G)\cong C_{4}$ or $|G'^{2}\cap \gamma_{3}(G)| = 1$, $\gamma_{3}(G)\cong C_{2}$)"},
        {16, "p=2", nullptr, "G'in:64:247,248 and G'^2==g3 and g3=C4 and g4=C2 and g5=1", nullptr,
         "",
         R"($G'$ is one of the groups $S(64,247)$ or $S(64,248)$, $G'^{2} = \gamma_{3}(G) \cong C_{4}$, $\gamma_{4}(G)\cong C_{2}$ and $\gamma_{5}(G) = 1$)"},
        {17, "p=2", nullptr, "G'in:64:263 and |G'^2&g3|=2 and g3=C4 and g4=C2 and g5=1", nullptr,
         "",
         R"($G' \cong S(64,263)$, $|G'^{2}\cap \gamma_{3}(G)| = 2$, $\gamma_{3}(G)\cong C_{4}$, $\gamma_{4}(G)\cong C_{2}$ and $\gamma_{5}(G) = 1$)"},
        {18, "p=2", nullptr, "G'=C8xC4 and ((G'^2<=g3 and g3=C4xC2) or (g3<=G'^2 and g3=C4))", nullptr,
         "",
         R"($G'\cong C_{8}\times C_{4}$, either $G'^{2}\subseteq \gamma_{3}(G) \cong C_{4}\times C_{2}$ or $\gamma_{3}(G)\subseteq G'^{2}$, $\gamma_{3}(G)\cong C_{4}$)"},
        {19, "p=2", nullptr, "G'=C8xC2^2 and G'^2<=g3 and g3=C4xC2", nullptr,
         "",
         R"($G'\cong C_{8}\times (C_{2})^{2}$ and $G'^{2}\subseteq \gamma_{3}(G) \cong C_{4}\times C_{2}$)"},
        {20, "p=2", nullptr, "G'=C4^2xC2 and ((|G'^2&g3|=2 and g3=C4) or (|G'^2&g3|=4 and g3=C4xC2))", nullptr,
         "",
         R"($G'\cong (C_{4})^{2} \times C_{2}$, either $|G'^{2}\cap \gamma_{3}(G)| = 2$, $\gamma_{3}(G) \cong C_{4}$ or $|G'^{2}\cap \gamma_{3}(G)| = 4$, $\gamma_{3}(G) \cong C_{4}\times C_{2}$)"},
        {21, "p=2", nullptr, "G'=C4xC2^3 and |G'^2&g3|=2 and g3=C4xC2", nullptr,
         "",
         R"($G'\cong C_{4}\times (C_{2})^{3}$, $|G'^{2}\cap \gamma_{3}(G)| = 2$ and $\gamma_{3}(G)\cong C_{4}\times C_{2}$)"},
        {22, "p=2", nullptr, "G'in:32:4,5,12 and g3<=G'^2 and G'^2=C4xC2 and g4<=G'^4g3^2 and G'^4g3^2=C2 and g5=1", nullptr,
         "",
         R"($G'$ is one of the groups $S(32,4)$, $S(32,5)$ or $S(32,12)$, $\gamma_{3}(G)\subseteq G'^{2}\cong C_{4}\times C_{2}$, $\gamma_{4}(G)\subseteq G'^{4}\gamma_{3}(G)^{2} \cong C_{2}$ and $\gamma_{5}(G) = 1$)"},
        {23, "p=2", nullptr, "G'in:32:22-26 and ((|G'^2&g3|=2 and g3=C4) or (G'^2<=g3 and g3=C4xC2)) and g4<=G'^4g3^2 and G'^4g3^2=C2 and g5=1", nullptr,
         "",
         R"($G'$ is one of the groups $S(32,22)$ to $S(32,26)$, either $|G'^{2}\cap \gamma_{3}(G)| = 2$, $\gamma_{3}(G)\cong C_{4}$ or $G'^{2}\subseteq \gamma_{3}(G) \cong C_{4}\times C_{2}$, $\gamma_{4}(G)\subseteq G'^{4}\gamma_{3}(G)^{2}\cong C_{2}$, $\gamma_{5}(G) = 1$)"},
        {24, "p=2", nullptr, "G'in:32:37,38 and ((|G'^2&g3|=2 and g3=C2^2) or (G'^2<=g3 and g3=C4xC2)) and g4<=G'^4g3^2 and G'^4g3^2=C2 and g5=1", nullptr,
         "",
         R"($G'$ is one of the groups $S(32,37)$ or $S(32,38)$, either $|G'^{2}\cap \gamma_{3}(G)| = 2$, $\gamma_{3}(G)\cong (C_{2})^{2}$ or $G'^{2}\subseteq \gamma_{3}(G)\cong C_{4}\times C_{2}$, $\gamma_{4}(G)\subseteq G'^{4}\gamma_{3}(G)^{2}\cong C_{2}$, $\gamma_{5}(G) = 1$)"},
        {25, "p=2", nullptr, "G'in:32:46-48 and ((|G'^2&g3|=1 and g3=C4) or (G'^2<=g3 and g3=C4xC2)) and g4<=G'^4g3^2 and G'^4g3^2=C2 and g5=1", nullptr,
         "",
         R"($G'$ is one of the groups $S(32,46)$ to $S(32,48)$, either $|G'^{2}\cap \gamma_{3}(G)| = 1$, $\gamma_{3}(G) \cong C_{4}$ or $G'^{2}\subseteq \gamma_{3}(G)\cong C_{4}\times C_{2}$, $\gamma_{4}(G)\subseteq G'^{4}\gamma_{3}(G)^{2}\cong C_{2}$, $\gamma_{5}(G) = 1$)"},
        {26, "p>=5", nullptr, "G'=Cp^4 and |G'^p&g3|=1 and g3=Cp^3 and g4=Cp^2 and g5=Cp", nullptr,
         "",
         R"($G'\cong (C_{p})^{4}$, $|G'^{p}\cap \gamma_{3}(G)| = 1$, $\gamma_{3}(G)\cong (C_{p})^{3}$, $\gamma_{4}(G)\cong (C_{p})^{2}$ and $\gamma_{5}(G) \cong C_{p}$ for $p\geq 5$)"},
        {27, "p=3", nullptr, "G'=C9xC3^2 and ((|G'^2&g3|=1 and g3=C3^2) or (G'^3<=g3 and g3=C3^3))", "G'=C9xC3^2 and ((|G'^3&g3|=1 and g3=C3^2) or (G'^3<=g3 and g3=C3^3))",
         "G'^2 = G' when p = 3; corrected to G'^3",
         R"($G'\cong C_{9}\times (C_{3})^{2}$, either $|G'^{2}\cap \gamma_{3}(G)| = 1$, $\gamma_{3}(G)\cong (C_{3})^{2}$ or $G'^{3}\subseteq \gamma_{3}(G) \cong (C_{3})^{3}$)"},
        {28, "p=3", nullptr, "G'=C3^4 and |G'^3&g3|=1 and g3=C3^3", nullptr,
         "",
         R"($G'\cong (C_{3})^{4}$, $|G'^{3}\cap \gamma_{3}(G)| = 1$ and $\gamma_{3}(G)\cong (C_{3})^{3}$)"},
        {29, "p=2", nullptr, "G'=C8xC2 and ((g3=C2 and |G'^2&g3|=1) or (G'^2<=g3 and g3=C4xC2))", nullptr,
         "",
         R"($G'\cong C_{8}\times C_{2}$, either $\gamma_{3}(G)\cong C_{2}$, $|G'^{2}\cap \gamma_{3}(G)| = 1$ or $G'^{2}\subseteq \gamma_{3}(G) \cong C_{4}\times C_{2}$)"},
        {30, "p=2", nullptr, "G'=C4xC2^2 and G'^2<=g3 and g3=C4xC2", nullptr,
         "",
         R"($G'\cong C_{4}\times (C_{2})^{2}$ and $G'^{2}\subseteq \gamma_{3}(G)\cong C_{4}\times C_{2}$)"},
        {31, "p>=5", nullptr, "G'~ref:item66:p:4 and g3=Cp^3 and g4=Cp^2 and g5=Cp and g6=1", nullptr,
         "",
         R"($G'\cong ((C_{p}\times C_{p})\rtimes C_{p})\times C_{p}$, $\gamma_{3}(G)\cong (C_{p})^{3}$, $\gamma_{4}(G)\cong (C_{p})^{2}$, $\gamma_{5}(G)\cong C_{p}$ and $\gamma_{6}(G) = 1$ for $p\geq5$)"},
        {32, "p=3", nullptr, "G'=C9^2 and G'^3<=g3 and g3=C3^3", nullptr,
         "",
         R"($G'\cong (C_{9})^{2}$ and $G'^{3}\subseteq \gamma_{3}(G) \cong (C_{3})^{3}$)"},
        {33, "p=3", nullptr, "G'=C9xC3^2 and ((|G'^3&g3|=1 and g3=C3^2) or (G'^3<=g3 and g3=C3^3))", nullptr,
         "",
         R"($G'\cong C_{9}\times (C_{3})^{2}$, either $|G'^{3}\cap \gamma_{3}(G)| = 1$, $\gamma_{3}(G) \cong (C_{3})^{2}$ or $G'^{3}\subseteq \gamma_{3}(G) \cong (C_{3})^{3} $)"},
        {34, "p=3", nullptr, "G'=C3^4 and |G'^3&g3|=1 and g3=C3^3", nullptr,
         "",
         R"($G'\cong (C_{3})^{4}$, $|G'^{3}\cap \gamma_{3}(G)| = 1$ and $\gamma_{3}(G) \cong (C_{3})^{3} $)"},
        {35, "p>=5", nullptr, "G'=Cp^5 and g3=Cp^3 and |G'^p&g3|=1", nullptr,
         "",
         R"($G'\cong (C_{p})^{5}$, $\gamma_{3}(G) \cong (C_{p})^{3}$ and $|G'^{p} \cap \gamma_{3}(G)| = 1$ for $p\geq 5$)"},
        {36, "p=3", nullptr, "G'=C9^2xC3 and G'^3<=g3 and g3=C3^3", nullptr,
         "",
         R"($G'\cong (C_{9})^{2} \times C_{3}$ and $G'^{3}\subseteq \gamma_{3}(G)\cong (C_{3})^{3}$)"},
        {37, "p=3", nullptr, "G'=C9xC3^3 and ((|G'^3&g3|=1 and g3=C3^2) or (G'^3<=g3 and g3=C3^3))", nullptr,
         "",
         R"($G'\cong C_{9}\times (C_{3})^{3}$, either $|G'^{3}\cap \gamma_{3}(G)| = 1$, $\gamma_{3}(G)\cong (C_{3})^{2}$ or $G'^{3}\subseteq \gamma_{3}(G) \cong (C_{3})^{3}$)"},
        {38, "p=3", nullptr, "G'=C3^5 and |G'^3&g3|=1 and g3=C3^3", nullptr,
         "",
         R"($G'\cong (C_{3})^{5}$, $|G'^{3}\cap \gamma_{3}(G)| = 1$ and $\gamma_{3}(G) \cong (C_{3})^{3}$)"},
        {39, "p=2", nullptr, "G'=C4^2xC2 and ((G'^2<=g3 and g3=C2^3) or (|G'^2&g3|=2 and g3=C2^2) or (|G'^2&g3|=1 and g3=C2))", nullptr,
         "",
         R"($G'\cong (C_{4})^{2}\times C_{2}$, either $G'^{2}\subseteq \gamma_{3}(G)\cong (C_{2})^{3}$ or $|G'^{2}\cap \gamma_{3}(G)| = 2$, $\gamma_{3}(G) \cong (C_{2})^{2} $ or $|G'^{2}\cap \gamma_{3}(G)| = 1$, $\gamma_{3}(G)\cong C_{2}$)"},
        {40, "p=2", nullptr, "G'=C4xC2^3 and ((G'^2<=g3 and g3=C2^3) or (|G'^2&g3|=1 and g3=C2^2))", nullptr,
         "",
         R"($G'\cong C_{4}\times (C_{2})^{3}$, either $G'^{2}\subseteq \gamma_{3}(G)\cong (C_{2})^{3}$ or $|G'^{2}\cap \gamma_{3}(G)| = 1$, $\gamma_{3}(G)\cong (C_{2})^{2} $)"},
        {41, "p=2", nullptr, "G'=C2^5 and |G'^2&g3|=1 and g3=C2^3", nullptr,
         "",
         R"($G'\cong (C_{2})^{5}$, $|G'^{2}\cap \gamma_{3}(G)| = 1$ and $\gamma_{3}(G)\cong (C_{2})^{3}$)"},
        {42, "p=2", nullptr, "G'in:32:2 and g3<=G'^2 and g4=C2 and g5=1", nullptr,
         "",
         R"($G'\cong S(32,2)$, $\gamma_{3}(G)\subseteq G'^{2}$, $\gamma_{4}(G)\cong C_{2}$ and $\gamma_{5}(G) = 1$)"},
        {43, "p=2", nullptr, "G'in:32:22-26 and g4=C2 and g5=1 and |G'^2&g3|=2 and g3=C2^2", nullptr,
         "",
         R"($G'$ is one of the groups $S(32,22)$ to $S(32,26)$, $\gamma_{4}(G)\cong C_{2}$, $\gamma_{5}(G) = 1$, $|G'^{2}\cap \gamma_{3}(G)| = 2$ and $\gamma_{3}(G)\cong (C_{2})^{2}$)"},
        {44, "p=2", nullptr, "G'in:32:46-48 and g4=C2 and g5=1 and ((|G'^2&g3|=1 and g3=C2^2) or (G'^2<=g3 and g3=C3^3))", "G'in:32:46-48 and g4=C2 and g5=1 and ((|G'^2&g3|=1 and g3=C2^2) or (G'^2<=g3 and g3=C2^3))",
         "a 3-group cannot be a subgroup of a 2-group; corrected (C3)^3 to (C2)^3",
         R"($G'$ is one of the groups $S(32,46)$ to $S(32,48)$, $\gamma_{4}(G)\cong C_{2}$, $\gamma_{5}(G) = 1$, either $|G'^{2}\cap \gamma_{3}(G)| = 1$, $\gamma_{3}(G)\cong (C_{2})^{2}$ or $G'^{2}\subseteq \gamma_{3}(G)\cong (C_{3})^{3}$)"},
        {45, "p=3", nullptr, "G'in:243:2,33,34,36 and ((G'^3<=g3 and g3=C3^3) or (|G'^3&g3|=3 and g3=C3^2)) and g4=C3 and g5=1", nullptr,
         "",
         R"($G'$ is one of the groups $S(243,2)$, $S(243,33)$, $S(243,34)$ or $S(243,36)$, either $G'^{3}\subseteq \gamma_{3}(G)\cong (C_{3})^{3}$ or $|G'^{3}\cap \gamma_{3}(G)| = 3$, $\gamma_{3}(G)\cong (C_{3})^{2}$, $\gamma_{4}(G)\cong C_{3}$, $\gamma_{5}(G) = 1$)"},
        {46, "p>=5", nullptr, "G'=Cp^5 and g3=Cp^3 and g4=Cp and g5=1", "G'~ref:item66:p:5 and g3=Cp^3 and g4=Cp and g5=1",
         "the factor <a,b,e> is called abelian but has [b,a] = e; literal reading takes G' abelian of type (Cp)^5, corrected reading takes the relations, G' = Heisenberg x (Cp)^2",
         R"($G'\cong \left< a,b, c, d, e \right> = \left<c,d \right>\times \left<a,b\right>$, where $\left<c,d\right> \cong C_{p}\times C_{p}$ and $\left<a,b,e| = a^{p} = b^{p}= e^{p}= 1, [b,a] = e\right> $ is abelian group of order $p^{3}$ and exponent $p$, $\gamma_{3}(G)\cong (C_{p})^{3}$, $\gamma_{4}(G)\cong C_{p}$ and $\gamma_{5}(G) = 1$ for $p\geq5$)"},
        {47, "p=3", nullptr, "G'=C9^2xC3^2 and g3<=G'^3 and g4=1", nullptr,
         "",
         R"($G'\cong (C_{9})^{2}\times (C_{3})^{2}$, $\gamma_{3}(G)\subseteq G'^{3}$ and $\gamma_{4}(G) = 1$)"},
        {48, "p=3", nullptr, "G'=C9xC3^4 and ((g3=C3 and g4=1 and |G'^3&g3|=1) or (G'^3<=g3 and g3=C3^2 and g4=1))", nullptr,
         "",
         R"($G'\cong C_{9}\times (C_{3})^{4}$, either $\gamma_{3}(G)\cong C_{3}$, $\gamma_{4}(G) = 1$, $|G'^{3}\cap \gamma_{3}(G)| = 1$ or $G'^{3} \subseteq \gamma_{3}(G)\cong (C_{3})^{2}$, $\gamma_{4}(G) = 1$)"},
        {49, "p=3", nullptr, "G'in:729:422,502 and G'^3<=g3 and g3=C3^2 and |G'^3&g4|=1 and g4=C3 and g5=1", nullptr,
         "",
         R"($G'$ is one of the groups $S(729, 422)$ or $S(729,502)$, $G'^{3}\subseteq \gamma_{3}(G)\cong (C_{3})^{2}$, $|G'^{3}\cap \gamma_{4}(G)| = 1$, $\gamma_{4}(G)\cong C_{3}$ and $\gamma_{5}(G) = 1$)"},
        {50, "p=3", nullptr, "G'in:729:423,424 and G'^3<=g3 and g3=C3^2 and g4=C3 and g5=1", nullptr,
         "",
         R"($G'$ is one of the groups $S(729,423)$ or $S(729,424)$, $G'^{3}\subseteq \gamma_{3}(G) \cong (C_{3})^{2}$, $\gamma_{4}(G)\cong C_{3}$ and $\gamma_{5}(G) = 1$)"},
        {51, "p=3", nullptr, "G'in:729:103,105,417,418,420,421 and G'^3==g3 and g3=C3^2 and g4=C3 and g5=1", nullptr,
         "",
         R"($G'$ is one of the groups $S(729,103)$, $S(729,105)$, $S(729,417)$, $S(729,418)$, $S(729,420)$ or $S(729,421)$, $G'^{3} = \gamma_{3}(G)\cong (C_{3})^{2}$, $\gamma_{4}(G)\cong C_{3}$ and $\gamma_{5}(G) = 1$)"},
        {52, "p=3", nullptr, "G'in:729:416,419,499,500 and G'^3<=g3 and g3=C3^2 and g4=C3 and g5=1", nullptr,
         "",
         R"($G'$ is one of the groups $S(729,416)$, $S(729,419)$, $S(729,499)$ or $S(729,500)$, $G'^{3}\subseteq \gamma_{3}(G)\cong (C_{3})^{2}$, $\gamma_{4}(G)\cong C_{3}$ and $\gamma_{5}(G) = 1$)"},
        {53, "p=3", nullptr, "G'=C9xC3^6 and g3<=G'^3 and G'^3=C3 and g4=1", nullptr,
         "",
         R"($G'\cong C_{9}\times (C_{3})^{6}$, $\gamma_{3}(G)\subseteq G'^{3}\cong C_{3}$ and $\gamma_{4}(G) = 1$)"},
        {54, "p=2", nullptr, "G'=C4^2xC2^3 and g3~G'^2", "G'=C4^2xC2^3 and g3<=G'^2",
         "isomorphism where the neighbouring items use containment; corrected to g3 <= G'^2",
         R"($G'\cong (C_{4})^{2}\times (C_{2})^{3}$ and $\gamma_{3}(G)\cong G'^{2}$)"},
        {55, "p=2", nullptr, "G'=C4xC2^5 and ((|G'^2&g3|=1 and g3=C2) or (G'^2<=g3 and g3=C2^2))", nullptr,
         "",
         R"($G'\cong C_{4}\times (C_{2})^{5}$, either $|G'^{2}\cap \gamma_{3}(G)| = 1$, $\gamma_{3}(G)\cong C_{2}$ or $G'^{2}\subseteq \gamma_{3}(G)\cong (C_{2})^{2}$)"},
        {56, "p=3", nullptr, "G'=C9xC3^5 and ((g3=C3 and |G'^3&g3|=1) or (G'^3<=g3 and g3=C3^2))", nullptr,
         "",
         R"($G'\cong C_{9}\times (C_{3})^{5}$, either $\gamma_{3}(G)\cong C_{3}$, $|G'^{3}\cap \gamma_{3}(G)| = 1$ or $G'^{3}\subseteq \gamma_{3}(G)\cong (C_{3})^{2}$)"},
        {57, "p>=5", nullptr, "G'=Cp^7 and |G'^p&g3|=1 and g3=Cp^2", nullptr,
         "",
         R"($G'\cong (C_{p})^{7}$, $|G'^{p}\cap \gamma_{3}(G)| = 1$ and $\gamma_{3}(G)\cong (C_{p})^{2}$ for $p\geq5$)"},
        {58, "p=2", nullptr, "G'in:128:2157-2162,2304 and G'^2<=g3 and g3=C2^2 and g4=C2 and g5=1", nullptr,
         "",
         R"($G'$ is one of the groups $S(128,2157)$ to $S(128,2162)$ or $S(128,2304)$, $G'^{2}\subseteq \gamma_{3}(G)\cong (C_{2})^{2}$, $\gamma_{4}(G)\cong C_{2}$ and $\gamma_{5}(G) = 1$)"},
        {59, "p=2", nullptr, "G'in:128:2323-2325 and |G'^2&g3|=2 and g3=C2^2 and g4=C2 and g5=1", nullptr,
         "",
         R"($G'$ is one of the groups $S(128,2323)$ to $S(128,2325)$, $|G'^{2}\cap \gamma_{3}(G) | = 2$, $\gamma_{3}(G)\cong (C_{2})^{2}$, $\gamma_{4}(G)\cong C_{2}$ and $\gamma_{5}(G) = 1$)"},
        {60, "p=2", nullptr, "G'in:128:2151-2156,2302,2303 and G'^2==g3 and g3=C2^2 and g4=C2 and g5=1", nullptr,
         "",
         R"($G'$ is one of the groups $S(128,2151)$ to $S(128,2156)$, $S(128,2302)$ or $S(128,2303)$, $G'^{2} = \gamma_{3}(G)\cong (C_{2})^{2}$, $\gamma_{4}(G)\cong C_{2}$ and $\gamma_{5}(G)= 1$)"},
        {61, "p=2", nullptr, "G'in:128:2320-2322 and G'^2<=g3 and g3=C2^2 and g4=C2 and g5=1", nullptr,
         "",
         R"($G'$ is one of the groups $S(128,2320)$ to $S(128,2322)$, $G'^{2}\subseteq \gamma_{3}(G)\cong (C_{2})^{2}$, $\gamma_{4}(G)\cong C_{2}$ and $\gamma_{5}(G) = 1$)"},
        {62, "p=3", nullptr, "G'in:2187:5874,5876,9102-9105 and G'^3==g3 and g3=C3^2 and g4=C3 and g5=1", nullptr,
         "",
         R"($G'$ is one of the groups $S(2187,5874)$, $S(2187,5876)$, $S(2187,9102)$ to $S(2187,9105)$, $G'^{3} = \gamma_{3}(G)\cong (C_{3})^{2}$, $\gamma_{4}(G)\cong C_{3}$ and $\gamma_{5}(G) = 1$)"},
        {63, "p=3", nullptr, "G'in:2187:9100,9101,9306,9307 and G'^3<=g3 and g3=C3^2 and g4=C3 and g5=1", nullptr,
         "",
         R"($G'$ is one of the groups $S(2187,9100)$, $S(2187,9101)$, $S(2187,9306)$ or $S(2187,9307)$, $G'^{3}\subseteq \gamma_{3}(G)\cong (C_{3})^{2}$, $\gamma_{4}(G)\cong C_{3}$ and $\gamma_{5}(G) = 1$)"},
        {64, "p=3", nullptr, "G'in:2187:5867,5870,5872,9096-9099 and G'^3==g3 and g3=C3^2 and g4=C3 and g5=1", nullptr,
         "",
         R"($G'$ is one of the groups $S(2187,5867)$, $S(2187,5870)$, $S(2187,5872)$ or $S(2187,9096)$ to $S(2187,9099)$, $G'^3 = \gamma_{3}(G)\cong (C_{3})^{2}$, $\gamma_{4}(G)\cong C_{3}$ and $\gamma_{5}(G) = 1$)"},
        {65, "p=3", nullptr, "G'in:2187:9094,9095,9303,9304 and G'^3<=g3 and g3=C3^2 and g4=C3 and g5=1", nullptr,
         "",
         R"($G'$ is one of the groups $S(2187,9094)$, $S(2187,9095)$, $S(2187,9303)$ or $S(2187,9304)$, $G'^{3}\subseteq \gamma_{3}(G)\cong ( C_{3})^{2}$, $\gamma_{4}(G)\cong C_{3}$ and $\gamma_{5}(G) = 1$)"},
        {66, "p>=3", nullptr, "G'~ref:item66:p and g3=Cp^2 and g4=Cp and g5=1", nullptr,
         "",
         R"($G'\cong <a,b,c,d,e,f,g: a^p = b^p = c^p = d^p =e^p= f^p = g^p = 1, [b,a] = c>$, $\gamma_{3}(G)\cong (C_{p})^{2}$, $\gamma_{4}(G)\cong C_{p}$ and $\gamma_{5}(G) = 1$ for $p\geq 3$)"},
        {67, "p>=3", nullptr, "G'~ref:item67:p and g3=Cp^2 and g4=Cp and g5=1", nullptr,
         "",
         R"($G'\cong <a,b,c,d,e,f,g: a^p = b^p = c^p = d^p =e^p= f^p = g^p = 1, [b,a]= e, [d,c] =e>$, $\gamma_{3}(G)\cong (C_{p})^{2}$, $\gamma_{4}(G)\cong C_{p}$ and $\gamma_{5}(G) = 1$ for $ p\geq 3$)"},
        {68, "p=2", nullptr, "G'=C4^3 and g3<=G'^2 and g4=1", nullptr,
         "",
         R"($G'\cong (C_{4})^{3}$, $\gamma_{3}(G)\subseteq G'^{2}$ and $\gamma_{4}(G) = 1$)"},
        {69, "p=2", nullptr, "G'=C4^2xC2^2 and ((|G'^2&g3|=1 and g3=C2) or g3=C2^2 or (G'^2<=g3 and g3=C2^3))", "G'=C4^2xC2^2 and ((|G'^2&g3|=1 and g3=C2) or (|G'^2&g3|=2 and g3=C2^2) or (G'^2<=g3 and g3=C2^3))",
         "the middle case has no intersection clause; corrected by the pattern of the parallel families to |G'^2 & g3| = 2",
         R"($G'\cong (C_{4})^{2}\times (C_{2})^{2}$, either $|G'^{2}\cap \gamma_{3}(G)| =1 $, $\gamma_{3}(G)\cong C_{2}$ or $\gamma_{3}(G)\cong (C_{2})^{2}$ or $G'^{2}\subseteq \gamma_{3}(G)\cong (C_{2})^{3}$)"},
        {70, "p=2", nullptr, "G'=C2^6 and |G'^2&g3|=1 and g3=C2^3 and g4=1", nullptr,
         "",
         R"($G'\cong (C_{2})^{6}$, $|G'^{2}\cap \gamma_{3}(G)| = 1$, $\gamma_{3}(G)\cong (C_{2})^3$ and $\gamma_{4}(G) = 1$)"},
        {71, "p=3", nullptr, "G'=C9xC3^4 and ((g3=C3^2 and |G'^2&g3|=1) or (G'^3<=g3 and g3=C3^3))", "G'=C9xC3^4 and ((g3=C3^2 and |G'^3&g3|=1) or (G'^3<=g3 and g3=C3^3))",
         "G'^2 = G' when p = 3; corrected to G'^3",
         R"($G'\cong C_{9}\times( C_{3})^{4}$, either $\gamma_{3}(G)\cong (C_{3})^{2}$, $|G'^{2}\cap \gamma_{3}(G)|= 1$ or $G'^{3}\subseteq \gamma_{3}(G)\cong (C_{3})^{3}$)"},
        {72, "p>=5", nullptr, "G'=Cp^6 and |G'^p&g3|=1 and g3=Cp^3 and g4=Cp and g5=1", nullptr,
         "",
         R"($G'\cong (C_{p})^{6}$, $|G'^{p}\cap\gamma_{3}(G)| = 1$, $\gamma_{3}(G)\cong( C_{p})^{3}$, $\gamma_{4}(G)\cong C_{p}$ and $\gamma_{5}(G) = 1$ for $p\geq5$)"},
        {73, "p=2", nullptr, "G'in:64:199-201 and |G'^2&g3|=2 and g3=C2^2 and g4=C2 and g5=1", nullptr,
         "",
         R"($G'$ is one of the groups $S(64,199)$ to $S(64,201)$, $|G'^{2}\cap \gamma_{3}(G)| = 2$, $\gamma_{3}(G)\cong (C_{2})^{2}$, $\gamma_{4}(G)\cong C_{2}$ and $\gamma_{5}(G) = 1$)"},
        {74, "p=2", nullptr, "G'in:64:264,265 and |G'^2&g3|=1 and g3=C2^2 and g4=C2 and g5=1", nullptr,
         "",
         R"($G'$ is one of the groups $S(64,264)$ or $S(64,265)$, $|G'^{2}\cap \gamma_{3}(G) |= 1$, $\gamma_{3}(G)\cong (C_{2})^{2}$, $\gamma_{4}(G)\cong C_{2}$ and $\gamma_{5}(G) = 1$)"},
        {75, "p=2", nullptr, "G'in:64:56-59 and g3<=G'^2 and g3=C2^2 and g4=C2 and g5=1", nullptr,
         "",
         R"($G'$ is one of the groups $S(64,56)$ to $S(64,59)$, $\gamma_{3}(G)\subseteq G'^{2}$, $\gamma_{3}(G)\cong (C_{2})^{2}$, $\gamma_{4}(G)\cong C_{2}$ and $\gamma_{5}(G) = 1$)"},
        {76, "p=2", nullptr, "G'in:64:193-198 and |G'^2&g3|=2 and g3=C2^2 and g4=C2 and g5=1", nullptr,
         "",
         R"($G'$ is one of the groups $S(64,193)$ to $S(64,198)$, $|G'^{2}\cap \gamma_{3}(G)| = 2$, $\gamma_{3}(G)\cong (C_{2})^{2}$, $\gamma_{4}(G)\cong C_{2}$ and $\gamma_{5}(G) = 1$)"},
        {77, "p=2", nullptr, "G'in:64:56-59 and g3<=G'^2 and g3=C2^3 and g4=C2 and g5=1", nullptr,
         "",
         R"($G'$ is one of the groups $S(64,56)$ to $S(64,59)$, $\gamma_{3}(G)\subseteq G'^{2}$, $\gamma_{3}(G)\cong (C_{2})^{3}$, $\gamma_{4}(G)\cong C_{2}$ and $\gamma_{5}(G) = 1$)"},
        {78, "p=2", nullptr, "G'in:64:193-198 and G'^2<=g3 and g3=C2^3", nullptr,
         "",
         R"($G'$ is one of the groups $S(64,193)$ to $S(64,198)$ and $G'^{2}\subseteq \gamma_{3}(G)\cong (C_{2})^{3}$)"},
        {79, "p=3", nullptr, "G'in:729:103-106,416-420,499,500 and G'^3<=g3 and g3=C3^3 and g4=C3 and g5=1", nullptr,
         "",
         R"($G'$ is one of the groups $S(729,103)$ to $S(729, 106)$, $S(729, 416)$ to $S(729,420)$, $S(729, 499)$ or $S(729,500)$, $G'^{3}\subseteq \gamma_{3}(G) \cong (C_{3})^{3}$, $\gamma_{4}(G)\cong C_{3}$ and $\gamma_{5}(G) = 1$)"},
        {80, "p=3", nullptr, "G'in:729:103,105,417,418,420,421 and |G'^3&g3|=3 and g3=C3^2 and g4=C3 and g5=1", nullptr,
         "",
         R"($G'$ is one of the groups $S(729,103)$, $S(729, 105)$, $S(729, 417)$, $S(729, 418)$, $S(729,420)$ or $S(729, 421)$, $|G'^{3}\cap \gamma_{3}(G)|= 3$, $\gamma_{3}(G)\cong (C_{3})^{2}$, $\gamma_{4}(G)\cong C_{3}$ and $\gamma_{5}(G)= 1$)"},
        {81, "p=3", nullptr, "G'in:729:104,106 and g3<=G'^2 and g3=C3^2 and g4=C3 and g5=1", "G'in:729:104,106 and g3<=G'^3 and g3=C3^2 and g4=C3 and g5=1",
         "G'^2 = G' when p = 3; corrected to G'^3",
         R"($G'$ is one of the groups $S(729,104)$ or $S(729,106)$, $ \gamma_{3}(G) \subseteq G'^{2}$, $\gamma_{3}(G)\cong (C_{3})^{2}$, $\gamma_{4}(G)\cong C_{3}$ and $\gamma_{5}(G) = 1$)"},
        {82, "p=3", nullptr, "G'in:729:416,419,499,500 and |G'^3&g3|=1 and g3=C3^2 and g4=C3 and g5=1", nullptr,
         "",
         R"($G'$ is one of the groups $S(729,416)$, $S(729,419)$, $S(729,499)$ or $S(729,500)$, $|G'^{3}\cap \gamma_{3}(G)|= 1$, $\gamma_{3}(G)\cong (C_{3})^{2}$, $\gamma_{4}(G)\cong C_{3}$ and $\gamma_{5}(G) = 1$)"},
        {83, "p>=5", nullptr, "G'~ref:item66:p:6 and g3=Cp^3 and |G'^p&g3|=1 and g4=Cp and g5=1", nullptr,
         "",
         R"($G'\cong \phi_{2}(1^5)\times (1)$, $\gamma_{3}(G)\cong (C_{p})^{3}$, $|G'^{p}\cap \gamma_{3}(G)| = 1$, $\gamma_{4}(G)\cong C_{p}$ and $\gamma_{5}(G)= 1$ for $p\geq5$)"},
        {84, "p=2", nullptr, "G'=C4^2xC2 and ((|G'^2&g3|=1 and g3=C2^2) or (|G'^2&g3|=2 and g3=C2^3) or (G'^2<=g3 and g3=C2^4))", nullptr,
         "",
         R"($G'\cong (C_{4})^{2}\times C_{2}$, either $|G'^{2}\cap \gamma_{3}(G)| = 1$, $\gamma_{3}(G)\cong (C_{2})^{2}$ or $|G'^{2}\cap \gamma_{3}(G)| = 2$, $\gamma_{3}(G)\cong (C_{2})^{3} $ or $G'^{2}\subseteq \gamma_{3}(G)\cong (C_{2})^{4}$)"},
        {85, "p=2", nullptr, "G'=C4xC2^3 and ((|G'^2&g3|=1 and g3=C2^3) or (G'^2<=g3 and g3=C2^4))", nullptr,
         "",
         R"($G'\cong C_{4}\times (C_{2})^{3}$, either $|G'^{2}\cap \gamma_{3}(G)| = 1$, $\gamma_{3}(G) \cong (C_{2})^{3}$ or $G'^{2}\subseteq \gamma_{3}(G)\cong (C_{2})^{4}$)"},
        {86, "p=2", nullptr, "G'=C2^4 and |G'^2&g3|=1 and g3=C2^4", nullptr,
         "",
         R"($G'\cong (C_{2})^{4}$, $|G'^{2}\cap \gamma_{3}(G)| = 1$ and $\gamma_{3}(G)\cong (C_{2})^{4}$)"},
        {87, "p=3", nullptr, "G'=C9xC3^3 and ((g3=C3^3 and |G'^3&g3|=1) or (g3=C3^4 and G'^3<=g3))", nullptr,
         "",
         R"($G'\cong C_{9}\times (C_{3})^{3}$, either $\gamma_{3}(G)\cong (C_{3})^{3}$, $|G'^{3}\cap \gamma_{3}(G)| = 1$ or $\gamma_{3}(G)\cong (C_{3})^{4}$, $G'^{3}\subseteq \gamma_{3}(G)$)"},
        {88, "p>=5", nullptr, "G'=Cp^5 and g3=Cp^4 and |G'^p&g3|=1", nullptr,
         "",
         R"($G'\cong (C_{p})^{5}$, $\gamma_{3}(G)\cong (C_{p})^{4}$ and $|G'^{p}\cap \gamma_{3}(G)| = 1$ for $p\geq5$)"},
        {89, "p=2", nullptr, "G'in:32:2 and |G'^2&g3|=4 and g3=C2^3 and g4=C2 and g5=1", nullptr,
         "",
         R"($G'\cong S(32,2)$, $|G'^{2}\cap \gamma_{3}(G)| = 4$, $\gamma_{3}(G)\cong (C_{2})^{3}$, $\gamma_{4}(G)\cong C_{2}$ and $\gamma_{5}(G) = 1$)"},
        {90, "p=3", nullptr, "G'in:243:32 and |G'^3&g3|=1 and g3=C3^3 and g4=C3", nullptr,
         "",
         R"($G'\cong S(243,32)$, $|G'^{3}\cap \gamma_{3}(G)| = 1$, $\gamma_{3}(G)\cong (C_{3})^{3}$ and $\gamma_{4}(G)\cong C_{3}$)"},
        {91, "any", nullptr, "G'=Cp^10 and g3=1 and |G'^3&g4|=1", "G'=Cp^10 and g3=1 and |G'^p&g4|=1",
         "G'^3 where the other generic items use G'^p; the clause is implied by g3 = 1 under either reading",
         R"($G'\cong (C_{p})^{10}$, $\gamma_{3}(G)= 1$ and $|G'^{3}\cap \gamma_{4}(G)| = 1$ for $p>0$)"},
        {92, "p>=3", nullptr, "G'=Cp^9 and g3=Cp and |G'^p&g3|=1 and g4=1", nullptr,
         "",
         R"($G'\cong (C_{p})^{9}$, $\gamma_{3}(G)\cong C_{p}$, $|G'^{p}\cap \gamma_{3}(G)| = 1$ and $\gamma_{4}(G)= 1$ for $p\geq3$)"},
        {93, "p=2", nullptr, "G'=C4xC2^7 and g3<=G'^2 and G'^2=C2 and g4=1", nullptr,
         "",
         R"($G'\cong C_{4}\times (C_{2})^{7}$, $\gamma_{3}(G)\subseteq G'^{2}\cong C_{2}$ and $\gamma_{4}(G)= 1$)"},
        {94, "p=2", nullptr, "G'=C2^9 and g3=C2 and |G'^2&g3|=1 and g4=1", nullptr,
         "",
         R"($G'\cong (C_{2})^{9}$, $\gamma_{3}(G)\cong C_{2}$, $|G'^{2}\cap \gamma_{3}(G)| = 1$ and $\gamma_{4}(G)= 1$)"},
        {95, "p>=3", nullptr, "G'=Cp^8 and g3=Cp^2 and |G'^p&g3|=1 and g4=1", nullptr,
         "",
         R"($G'\cong (C_{p})^{8}$, $\gamma_{3}(G)\cong (C_{p})^{2} $, $|G'^{p}\cap \gamma_{3}(G)| = 1$ and $\gamma_{4}(G)= 1$ for $p\geq3$)"},
        {96, "p>=5", "p=2", "G'=C2^8 and |G'^2&g3|=1 and g3=C2^2 and g4=1", nullptr,
         "a 2-group G' is stated under the gate p >= 5, which never applies; corrected gate p = 2",
         R"($G'\cong (C_{2})^{8}$, $|G'^{2}\cap \gamma_{3}(G)| = 1$, $\gamma_{3}(G)\cong (C_{2})^{2}$ and $\gamma_{4}(G)= 1$ for $p\geq5$)"},
        {97, "p>=5", "p=2", "G'=C4xC2^6 and ((|G'^2&g3|=1 and g3=C2) or (G'^2<=g3 and g3=C2^2))", nullptr,
         "a 2-group G' is stated under the gate p >= 5, which never applies; corrected gate p = 2",
         R"($G'\cong C_{4}\times (C_{2})^{6}$, either $|G'^{2}\cap \gamma_{3}(G)| = 1$, $\gamma_{3}(G)\cong C_{2}$ or $G'^{2}\subseteq \gamma_{3}(G)\cong (C_{2})^{2}$ for $p\geq5$)"},
        {98, "p=2", nullptr, "G'=C4^2xC2^4 and g3<=G'^2 and g4=1", nullptr,
         "",
         R"($G'\cong (C_{4})^{2}\times (C_{2})^{4}$, $\gamma_{3}(G)\subseteq G'^{2}$ and $\gamma_{4}(G)= 1$)"},
        {99, "p>=3", nullptr, "G'=Cp^7 and g3=Cp^3 and |G'^p&g3|=1", nullptr,
         "",
         R"($G'\cong (C_{p})^{7}$, $\gamma_{3}(G)\cong C_{p}\times C_{p}\times C_{p}$ and $|G'^{p}\cap \gamma_{3}(G)| = 1$ for $p\geq3$)"},
        {100, "p=2", nullptr, "G'=C4^3xC2 and g3<=G'^2 and g4=1", nullptr,
         "",
         R"($G'\cong (C_{4})^{3}\times C_{2}$, $\gamma_{3}(G)\subseteq G'^{2}$ and $\gamma_{4}(G)= 1$)"},
        {101, "p=2", nullptr, "G'=C4^2xC2^3 and ((|G'^2&g3|=1 and g3=C2) or (|G'^2&g3|=2 and g3=C2^2) or (G'^2<=g3 and g3=C2^3)) and g4=1", nullptr,
         "",
         R"($G'\cong (C_{4})^{2}\times (C_{2})^{3}$, either $|G'^{2}\cap \gamma_{3}(G)| = 1$, $\gamma_{3}(G)\cong C_{2}$ or $|G'^{2}\cap \gamma_{3}(G)| = 2$, $\gamma_{3}(G)\cong C_{2}\times C_{2}$ or $G'^{2}\subseteq \gamma_{3}(G)\cong (C_{2})^{3}$, $\gamma_{4}(G)= 1$)"},
        {102, "p=2", nullptr, "G'=C4xC2^5 and ((|G'^2&g3|=1 and g3=C2^2) or (G'^2<=g3 and g3=C2^3))", nullptr,
         "",
         R"($G'\cong C_{4}\times (C_{2})^{5}$, either $|G'^{2}\cap \gamma_{3}(G)| = 1$, $\gamma_{3}(G)\cong (C_{2})^{2}$ or $G'^{2}\subseteq \gamma_{3}(G)\cong (C_{2})^{3}$)"},
        {103, "p=2", nullptr, "G'=C2^7 and |G'^2&g3|=1 and g3=C2^3 and g4=1", nullptr,
         "",
         R"($G'\cong (C_{2})^{7}$, $|G'^{2}\cap \gamma_{3}(G)| = 1$, $\gamma_{3}(G)\cong (C_{2})^{3}$ and $\gamma_{4}(G)= 1$)"},
        {104, "p>=3", nullptr, "G'=Cp^6 and |G'^p&g3|=1 and g3=Cp^4", nullptr,
         "",
         R"($G'\cong (C_{p})^{6}$, $|G'^{p}\cap \gamma_{3}(G)| = 1$ and $\gamma_{3}(G)\cong (C_{p})^{4}$ for $p\geq3$)"},
        {105, "p=2", nullptr, "G'=C4^3 and g3<=G'^2 and g4=1", nullptr,
         "",
         R"($G'\cong (C_{4})^{3}$, $\gamma_{3}(G)\subseteq G'^{2}$ and $\gamma_{4}(G)= 1$)"},
        {106, "p=2", nullptr, "G'=C4^2xC2^2 and ((|G'^2&g3|=1 and g3=C2^2) or (|G'^2&g3|=2 and g3=C2^3) or (G'^2<=g3 and g3=C2^4)) and g4=1", nullptr,
         "",
         R"($G'\cong (C_{4})^{2}\times (C_{2})^{2}$, either $|G'^{2}\cap \gamma_{3}(G)| = 1$, $\gamma_{3}(G)\cong (C_{2})^{2}$ or $|G'^{2}\cap \gamma_{3}(G)| = 2$, $\gamma_{3}(G)\cong (C_{2})^{3}$ or $G'^{2}\subseteq \gamma_{3}(G)\cong (C_{2})^{4}$, $\gamma_{4}(G)= 1$)"},
        {107, "p=2", nullptr, "G'=C4xC2^4 and ((|G'^2&g3|=1 and g3=C2^3) or (G'^2<=g3 and g3=C2^4)) and g4=1", nullptr,
         "",
         R"($G'\cong C_{4}\times (C_{2})^{4}$, either $|G'^{2}\cap \gamma_{3}(G)| = 1$, $\gamma_{3}(G)\cong (C_{2})^{3}$ or $G'^{2}\subseteq \gamma_{3}(G) \cong (C_{2})^{4}$, $\gamma_{4}(G)= 1$)"},
        {108, "p=2", nullptr, "G'=C2^6 and |G'^2&g3|=1 and g3=C2^4 and g4=1", nullptr,
         "",
         R"($G'\cong (C_{2})^{6}$, $|G'^{2}\cap \gamma_{3}(G)| = 1$, $\gamma_{3}(G)\cong (C_{2})^{4}$ and $\gamma_{4}(G)= 1$)"},
    };
    return rows;
}

}  // namespace lienil::detail
