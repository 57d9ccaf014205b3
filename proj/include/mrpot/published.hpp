#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace mrpot::published {

/// Binding energies -E in atomic units at A = 2b. Index 0 is alpha = 0.75,
/// index 1 is alpha = 1.5. The reference column is the direct numerical
/// integration with the exact centrifugal barrier; it is blank at 1/b = 0.1.
struct table1_row
{
    std::string_view state;
    double inv_b;
    std::array<double, 2> present;
    std::array<double, 2> previous;
    std::array<std::optional<double>, 2> reference;
};

inline constexpr std::array<double, 2> table1_alphas{0.75, 1.5};

inline constexpr std::array<table1_row, 28> table1{{
    {"2p", 0.025, {0.1205297, 0.0899732}, {0.1205793, 0.0900229}, {0.1205271, 0.0899708}},
    {"2p", 0.050, {0.1082245, 0.0800489}, {0.1084228, 0.0802472}, {0.1082151, 0.0800400}},
    {"2p", 0.075, {0.0964658, 0.0705870}, {0.0969120, 0.0710332}, {0.0964469, 0.0705701}},
    {"2p", 0.100, {0.0852807, 0.0569224}, {0.0860740, 0.0577157}, {std::nullopt, std::nullopt}},
    {"3p", 0.025, {0.0458800, 0.0369154}, {0.0459297, 0.0369651}, {0.0458779, 0.0369134}},
    {"3p", 0.050, {0.0350689, 0.0272736}, {0.0352672, 0.0274719}, {0.0350633, 0.0272696}},
    {"3p", 0.075, {0.0255647, 0.0189388}, {0.0260110, 0.0193850}, {0.0255654, 0.0189474}},
    {"3p", 0.100, {0.0173676, 0.0119110}, {0.0181609, 0.0127043}, {std::nullopt, std::nullopt}},
    {"3d", 0.025, {0.0447812, 0.0394857}, {0.0449299, 0.0396345}, {0.0447743, 0.0394789}},
    {"3d", 0.050, {0.0337133, 0.0294680}, {0.0343082, 0.0300629}, {0.0336930, 0.0294496}},
    {"3d", 0.075, {0.0237782, 0.0204734}, {0.0251168, 0.0218121}, {0.0237621, 0.0204663}},
    {"4p", 0.025, {0.0208112, 0.0171753}, {0.0208608, 0.0172249}, {0.0208097, 0.0171740}},
    {"4p", 0.050, {0.0117308, 0.0089036}, {0.0119292, 0.0091019}, {0.0117365, 0.0089134}},
    {"4p", 0.075, {0.0050311, 0.0031016}, {0.0054773, 0.0035478}, {0.0050945, 0.0031884}},
    {"4d", 0.025, {0.0203068, 0.0182162}, {0.0204555, 0.0183649}, {0.0203017, 0.0182115}},
    {"4d", 0.050, {0.0109792, 0.0094998}, {0.0115742, 0.0100947}, {0.0109904, 0.0095167}},
    {"4d", 0.075, {0.0038661, 0.0029422}, {0.0052047, 0.0042808}, {0.0040331, 0.0031399}},
    {"4f", 0.025, {0.0199911, 0.0186247}, {0.0202887, 0.0189223}, {0.0199797, 0.0186137}},
    {"4f", 0.050, {0.0102384, 0.0093953}, {0.0114284, 0.0105852}, {0.0102393, 0.0094015}},
    {"4f", 0.075, {0.0024162, 0.0019754}, {0.0050935, 0.0046527}, {0.0026443, 0.0022307}},
    {"5p", 0.025, {0.0098080, 0.0080812}, {0.0098576, 0.0081308}, {0.0098079, 0.0080816}},
    {"5d", 0.025, {0.0095150, 0.0085415}, {0.0096637, 0.0086902}, {0.0095141, 0.0085415}},
    {"5f", 0.025, {0.0092862, 0.0086647}, {0.0095837, 0.0089622}, {0.0092825, 0.0086619}},
    {"5g", 0.025, {0.0090440, 0.0086252}, {0.0095398, 0.0091210}, {0.0090330, 0.0086150}},
    {"6p", 0.025, {0.0043555, 0.0034838}, {0.0044051, 0.0035334}, {0.0043583, 0.0034876}},
    {"6d", 0.025, {0.0041574, 0.0036722}, {0.0043061, 0.0038209}, {0.0041650, 0.0036813}},
    {"6f", 0.025, {0.0039677, 0.0036631}, {0.0042652, 0.0039606}, {0.0039803, 0.0036774}},
    {"6g", 0.025, {0.0037470, 0.0035464}, {0.0042428, 0.0040422}, {0.0037611, 0.0035623}},
}};

/// Binding energies -E in eV at A = 2b with b in pm, for two molecules.
/// Columns per molecule: alpha in {0 or 1, 0.75, 1.5}.
struct molecule_table_row
{
    std::string_view state;
    double inv_b;
    std::array<double, 3> first;
    std::array<double, 3> second;
};

inline constexpr std::array<double, 3> molecule_table_alphas{0.0, 0.75, 1.5};

inline constexpr std::array<std::string_view, 2> table2_molecules{"HCl", "CH"};

inline constexpr std::array<molecule_table_row, 29> table2{{
    {"2p", 0.025, {4.80941188, 5.14067096, 3.83741636}, {5.06889891, 5.41803073, 4.04446034}},
    {"2p", 0.050, {4.30992001, 4.61584459, 3.41413694}, {4.54245745, 4.86488789, 3.59834329}},
    {"2p", 0.075, {3.83285565, 4.11432861, 3.01058097}, {4.03965355, 4.33631311, 3.17301386}},
    {"2p", 0.100, {3.37821878, 3.63612726, 2.42777890}, {3.56048721, 3.83231089, 2.55876729}},
    {"3p", 0.025, {1.86422242, 1.95681272, 1.57446670}, {1.96480468, 2.06239060, 1.65941548}},
    {"3p", 0.050, {1.41471071, 1.49571070, 1.16323608}, {1.49104002, 1.57641028, 1.22599733}},
    {"3p", 0.075, {1.02094947, 1.09035060, 0.80775166}, {1.07603378, 1.14917938, 0.85133310}},
    {"3p", 0.100, {0.68293440, 0.74074096, 0.50801342}, {0.71978146, 0.78070691, 0.53542279}},
    {"3d", 0.025, {1.85999327, 1.90994571, 1.68408920}, {1.96034735, 2.01299493, 1.77495255}},
    {"3d", 0.050, {1.39779410, 1.43789211, 1.25682731}, {1.47321069, 1.51547215, 1.32463817}},
    {"3d", 0.075, {0.98288709, 1.01415428, 0.87320241}, {1.03591778, 1.06887196, 0.92031517}},
    {"3d", 0.100, {0.61526795, 0.63872794, 0.53322303}, {0.64846412, 0.67318987, 0.56199254}},
    {"4p", 0.025, {0.85089842, 0.88761210, 0.73253860}, {0.89680780, 0.93550233, 0.77206199}},
    {"4p", 0.050, {0.47136150, 0.50032556, 0.37974364}, {0.49679334, 0.52732013, 0.40023233}},
    {"4p", 0.075, {0.19422206, 0.21457922, 0.13228479}, {0.20470112, 0.22615662, 0.13942208}},
    {"4d", 0.025, {0.84666927, 0.86609664, 0.77693119}, {0.89235047, 0.91282602, 0.81884974}},
    {"4d", 0.050, {0.45444489, 0.46826797, 0.40517060}, {0.47896401, 0.49353290, 0.42703117}},
    {"4d", 0.075, {0.15615968, 0.16489027, 0.12548533}, {0.16458512, 0.17378676, 0.13225577}},
    {"4f", 0.025, {0.84032554, 0.85263452, 0.79435667}, {0.88566447, 0.89863756, 0.83721539}},
    {"4f", 0.050, {0.42906997, 0.43667458, 0.40071582}, {0.45222001, 0.46023492, 0.42233604}},
    {"4f", 0.075, {0.09906611, 0.10305395, 0.08425354}, {0.10441112, 0.10861411, 0.08879935}},
    {"5p", 0.025, {0.40106735, 0.41831847, 0.34466933}, {0.42270654, 0.44088842, 0.36326562}},
    {"5d", 0.025, {0.39683820, 0.40581936, 0.36429895}, {0.41824921, 0.42771494, 0.38395434}},
    {"5f", 0.025, {0.39049447, 0.39606358, 0.36955620}, {0.41156321, 0.41743279, 0.38949523}},
    {"5g", 0.025, {0.38203616, 0.38573290, 0.36787081}, {0.40264543, 0.40654473, 0.38771891}},
    {"6p", 0.025, {0.17707786, 0.18576580, 0.14858723}, {0.18663192, 0.19578861, 0.15660410}},
    {"6d", 0.025, {0.17284871, 0.17731423, 0.15662014}, {0.18217459, 0.18688105, 0.16507042}},
    {"6f", 0.025, {0.16650498, 0.16922609, 0.15623470}, {0.17548859, 0.17835652, 0.16466420}},
    {"6g", 0.025, {0.15804667, 0.15981241, 0.15125669}, {0.16657392, 0.16843493, 0.15941759}},
}};

inline constexpr std::array<std::string_view, 2> table3_molecules{"LiH", "CO"};

inline constexpr std::array<molecule_table_row, 29> table3{{
    {"2p", 0.025, {5.35576397, 5.72465427, 4.27334918}, {1.37443170, 0.73438794, 0.54852071}},
    {"2p", 0.050, {4.79952952, 5.14020732, 3.80198495}, {1.23262476, 0.65941210, 0.48773809}},
    {"2p", 0.075, {4.26827035, 4.58171881, 3.35258477}, {1.09782989, 0.58776634, 0.43008673}},
    {"2p", 0.100, {3.76198647, 4.04919351, 2.70357604}, {0.97004711, 0.51945126, 0.34682857}},
    {"3p", 0.025, {2.07599922, 2.17910783, 1.75332707}, {0.53294169, 0.27954710, 0.22492577}},
    {"3p", 0.050, {1.57542270, 1.66562433, 1.29538040}, {0.40541491, 0.21367481, 0.16617803}},
    {"3p", 0.075, {1.13692993, 1.21421508, 0.89951273}, {0.29442115, 0.15576572, 0.11539410}},
    {"3p", 0.100, {0.76051617, 0.82488959, 0.56572406}, {0.19995917, 0.10582106, 0.07257398}},
    {"3d", 0.025, {2.07128963, 2.12691670, 1.87540274}, {0.53233752, 0.27285176, 0.24058626}},
    {"3d", 0.050, {1.55658435, 1.60123752, 1.39960364}, {0.40299823, 0.20541494, 0.17954832}},
    {"3d", 0.075, {1.09454364, 1.12936281, 0.97239872}, {0.29098362, 0.14488044, 0.12474428}},
    {"3d", 0.100, {0.68516276, 0.71128782, 0.59379748}, {0.19029245, 0.09124764, 0.07617538}},
    {"4p", 0.025, {0.94756010, 0.98844538, 0.81575544}, {0.24341803, 0.12680283, 0.10464928}},
    {"4p", 0.050, {0.52490845, 0.55716284, 0.42288275}, {0.13588423, 0.07147570, 0.05424956}},
    {"4p", 0.075, {0.21628580, 0.23895554, 0.14731241}, {0.05821126, 0.03065444, 0.01889799}},
    {"4d", 0.025, {0.94285141, 0.96448574, 0.86519105}, {0.24281386, 0.12372917, 0.11099113}},
    {"4d", 0.050, {0.50607010, 0.52146349, 0.45119822}, {0.13346755, 0.06658523, 0.05788202}},
    {"4d", 0.075, {0.17389951, 0.18362190, 0.13974054}, {0.05277373, 0.02355596, 0.01792663}},
    {"4f", 0.025, {0.93578703, 0.94949432, 0.88459607}, {0.24190761, 0.12180599, 0.11348051}},
    {"4f", 0.050, {0.47781258, 0.48628108, 0.44623738}, {0.12984253, 0.06238263, 0.05724561}},
    {"4f", 0.075, {0.11032008, 0.11476093, 0.09382479}, {0.04461744, 0.01472212, 0.01203632}},
    {"5p", 0.025, {0.44662885, 0.46583971, 0.38382398}, {0.11489375, 0.05976030, 0.04923890}},
    {"5d", 0.025, {0.44191926, 0.45192068, 0.40568353}, {0.11428958, 0.05797470, 0.05204316}},
    {"5f", 0.025, {0.43485488, 0.44105664, 0.41153801}, {0.11338333, 0.05658100, 0.05279420}},
    {"5g", 0.025, {0.42543570, 0.42955239, 0.40966116}, {0.11217500, 0.05510518, 0.05255343}},
    {"6p", 0.025, {0.19719402, 0.20686891, 0.16546683}, {0.05089620, 0.02653820, 0.02122693}},
    {"6d", 0.025, {0.19248443, 0.19745724, 0.17441228}, {0.05029203, 0.02533082, 0.02237450}},
    {"6f", 0.025, {0.18542005, 0.18845028, 0.17398306}, {0.04938577, 0.02417537, 0.02231944}},
    {"6g", 0.025, {0.17600087, 0.17796720, 0.16843954}, {0.04817743, 0.02283054, 0.02160829}},
}};

} // namespace mrpot::published
