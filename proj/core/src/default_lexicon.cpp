// Copyright 2026 The strokepheno Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "strokepheno/lexicon.hpp"

namespace strokepheno::detail {

// Finding, stage and lacunarity rows follow the radiologist-built keyword
// table. Inflections of "infarct", "lacune" and "lesion" are added because
// matching is on whole words.
const char* const kDefaultLexiconConfig = R"(# Built-in strokepheno lexicon.

[is_finding_ct]
hypodensity
hypodensities
hyperdensity
hyperdensities
hypodense
hypoattenuation
hypo-attenuation
low attenuation
low-attenuation
hypoattenuating
hypo-attenuating
low attenuating
low-attenuating
decreased attenuation
lacune
infarct
lesion
lacunes
infarcts
infarction
infarctions
lesions

[is_finding_mri]
restricted diffusion
slow diffusion
susceptibility artifact
signal
infarct
infarcts
infarction
infarctions
diffusion restriction

[stage_acute_subacute]
acute/subacute
acute / subacute
acute-subacute
acute to subacute

[stage_subacute]
sub-acute
subacute
sub acute
evolving

[stage_acute]
acute

[stage_chronic]
encephalomalacia
gliosis
known
old
previous
prior

[lacunar]
lacune
lacunar

[laterality_left]
left

[laterality_right]
right

[laterality_bilateral]
both
bilateral
bilaterally

[bilateral_plural]
thalami
capsules

[cortical_terms]
cortex
cortical
subcortical

[region.CerebralHemisphere]
cerebral hemisphere
cerebral hemispheres

[region.FrontalLobe]
frontal

[region.OccipitalLobe]
occipital

[region.ParietalLobe]
parietal

[region.TemporalLobe]
temporal

[region.Cerebellum]
cerebellum
cerebellar

[region.Brainstem]
brainstem
brain stem
pons
pontine
midbrain
medulla
medulla oblongata

[region.BasalGanglia]
basal ganglia
caudate
caudate nucleus
caudate head
caudate nucleus head
putamen
globus pallidus
lentiform nucleus

[region.Thalamus]
thalamus
thalami
thalamic

[region.CerebralPeduncle]
cerebral peduncle
cerebral peduncles

[region.InternalExternalCapsule]
internal capsule
external capsule
capsule
capsules

[region.CoronaRadiata]
corona radiata

[region.Insula]
insula
insular

[region.Watershed]
watershed

[territory.mca]
FrontalLobe
ParietalLobe
Insula

[territory.middle cerebral artery]
FrontalLobe
ParietalLobe
Insula

[territory.pca]

[territory.aca]

[territory.basilar]

[cue.HypodensityCorticalSubcortical]
hypodensity
hypodensities
hypodense
hypoattenuation
hypo-attenuation
hypoattenuating
hypo-attenuating
low attenuation
low-attenuation
low attenuating
low-attenuating
decreased attenuation

[cue.HyperdenseMCA]
hyperdense mca
hyperdense middle cerebral artery
dense mca
hyperdensity in the mca
hyperdensity of the mca

[cue.HyperdensityBasilar]
hyperdensity in basilar artery
hyperdensity in the basilar artery
hyperdensity of the basilar artery
hyperdense basilar artery
dense basilar artery

[cue.LossGrayWhiteDifferentiation]
loss of gray-white matter differentiation
loss of grey-white matter differentiation
loss of gray white matter differentiation
loss of the gray-white matter differentiation
loss of gray-white differentiation
loss of grey-white differentiation
loss of the normal gray-white matter differentiation
loss of normal gray-white matter differentiation

[cue.SulcalEffacement]
sulcal effacement
effacement of sulci
effacement of the sulci
effacement of adjacent sulci
effacement of the adjacent sulci
effacement of the overlying sulci
effaced sulci

[cue.ProminenceVentriclesSulci]
prominence of ventricles
prominence of the ventricles
prominence of sulci
prominence of the sulci
prominence of the ventricles and sulci
prominent ventricles
prominent sulci
ex vacuo

[cue.Atrophy]
atrophy
atrophic
volume loss

[cue.GliosisEncephalomalacia]
gliosis
encephalomalacia
gliotic
encephalomalacic

[cue.RestrictedOrSlowDiffusion]
restricted diffusion
slow diffusion
reduced diffusion
diffusion restriction

[cue.LossFlowVoidMCABasilar]
loss of flow void
loss of the flow void
loss of normal flow void
loss of the normal flow void
absent flow void

[cue.FacilitatedDiffusion]
facilitated diffusion
increased diffusion

[cue.DilationVentricles]
dilation of ventricles
dilation of the ventricles
dilatation of ventricles
dilatation of the ventricles
ventricular dilation
ventricular dilatation
dilated ventricles
)";

}  // namespace strokepheno::detail
