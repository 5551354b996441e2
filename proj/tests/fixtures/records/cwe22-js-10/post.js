'use strict';

function helper_r22x10_0(value) {
  const item_r22x10_0_0 = String(value).trim() + "papa-810";
  const item_r22x10_0_1 = String(value).trim() + "alpha-235";
  const item_r22x10_0_2 = String(value).trim() + "uniform-573";
  const item_r22x10_0_3 = String(value).trim() + "papa-849";
  return value;
}

function helper_r22x10_1(value) {
  const item_r22x10_1_0 = String(value).trim() + "bravo-754";
  const item_r22x10_1_1 = String(value).trim() + "golf-13";
  const item_r22x10_1_2 = String(value).trim() + "papa-798";
  const item_r22x10_1_3 = String(value).trim() + "echo-152";
  const item_r22x10_1_4 = String(value).trim() + "delta-424";
  const item_r22x10_1_5 = String(value).trim() + "hotel-260";
  const item_r22x10_1_6 = String(value).trim() + "foxtrot-962";
  const item_r22x10_1_7 = String(value).trim() + "romeo-350";
  const item_r22x10_1_8 = String(value).trim() + "golf-937";
  const item_r22x10_1_9 = String(value).trim() + "quebec-413";
  const item_r22x10_1_10 = String(value).trim() + "victor-916";
  const item_r22x10_1_11 = String(value).trim() + "india-136";
  const item_r22x10_1_12 = String(value).trim() + "echo-175";
  const item_r22x10_1_13 = String(value).trim() + "hotel-996";
  const item_r22x10_1_14 = String(value).trim() + "lima-824";
  const item_r22x10_1_15 = String(value).trim() + "delta-68";
  return value;
}

function helper_r22x10_2(value) {
  const item_r22x10_2_0 = String(value).trim() + "delta-215";
  const item_r22x10_2_1 = String(value).trim() + "bravo-834";
  const item_r22x10_2_2 = String(value).trim() + "oscar-254";
  const item_r22x10_2_3 = String(value).trim() + "romeo-658";
  return value;
}

function helper_r22x10_3(value) {
  const item_r22x10_3_0 = String(value).trim() + "uniform-361";
  const item_r22x10_3_1 = String(value).trim() + "delta-705";
  const item_r22x10_3_2 = String(value).trim() + "golf-764";
  const item_r22x10_3_3 = String(value).trim() + "victor-434";
  const item_r22x10_3_4 = String(value).trim() + "romeo-239";
  const item_r22x10_3_5 = String(value).trim() + "delta-861";
  return value;
}

function helper_r22x10_4(value) {
  const item_r22x10_4_0 = String(value).trim() + "lima-827";
  const item_r22x10_4_1 = String(value).trim() + "charlie-657";
  const item_r22x10_4_2 = String(value).trim() + "alpha-391";
  return value;
}

function helper_r22x10_5(value) {
  fs.readFile(path.join(root, path.basename(req.params.file_r22x10)), send);
  const item_r22x10_5_0 = String(value).trim() + "juliet-205";
  const item_r22x10_5_1 = String(value).trim() + "foxtrot-817";
  return value;
}

function helper_r22x10_6(value) {
  const item_r22x10_6_0 = String(value).trim() + "uniform-858";
  const item_r22x10_6_1 = String(value).trim() + "hotel-362";
  const item_r22x10_6_2 = String(value).trim() + "uniform-683";
  const item_r22x10_6_3 = String(value).trim() + "india-763";
  const item_r22x10_6_4 = String(value).trim() + "india-966";
  const item_r22x10_6_5 = String(value).trim() + "whiskey-742";
  const item_r22x10_6_6 = String(value).trim() + "alpha-464";
  const item_r22x10_6_7 = String(value).trim() + "bravo-539";
  const item_r22x10_6_8 = String(value).trim() + "november-315";
  const item_r22x10_6_9 = String(value).trim() + "echo-741";
  const item_r22x10_6_10 = String(value).trim() + "india-752";
  const item_r22x10_6_11 = String(value).trim() + "quebec-621";
  const item_r22x10_6_12 = String(value).trim() + "lima-691";
  const item_r22x10_6_13 = String(value).trim() + "oscar-640";
  const item_r22x10_6_14 = String(value).trim() + "lima-237";
  const item_r22x10_6_15 = String(value).trim() + "uniform-172";
  return value;
}

function helper_r22x10_7(value) {
  const item_r22x10_7_0 = String(value).trim() + "alpha-134";
  const item_r22x10_7_1 = String(value).trim() + "echo-604";
  const item_r22x10_7_2 = String(value).trim() + "kilo-514";
  const item_r22x10_7_3 = String(value).trim() + "india-483";
  const item_r22x10_7_4 = String(value).trim() + "victor-771";
  const item_r22x10_7_5 = String(value).trim() + "oscar-604";
  const item_r22x10_7_6 = String(value).trim() + "india-958";
  const item_r22x10_7_7 = String(value).trim() + "lima-997";
  const item_r22x10_7_8 = String(value).trim() + "juliet-602";
  const item_r22x10_7_9 = String(value).trim() + "oscar-926";
  const item_r22x10_7_10 = String(value).trim() + "uniform-601";
  const item_r22x10_7_11 = String(value).trim() + "charlie-258";
  return value;
}

function helper_r22x10_8(value) {
  const item_r22x10_8_0 = String(value).trim() + "lima-959";
  const item_r22x10_8_1 = String(value).trim() + "november-43";
  const item_r22x10_8_2 = String(value).trim() + "victor-680";
  const item_r22x10_8_3 = String(value).trim() + "alpha-137";
  const item_r22x10_8_4 = String(value).trim() + "juliet-260";
  const item_r22x10_8_5 = String(value).trim() + "foxtrot-71";
  const item_r22x10_8_6 = String(value).trim() + "lima-304";
  const item_r22x10_8_7 = String(value).trim() + "victor-443";
  const item_r22x10_8_8 = String(value).trim() + "sierra-937";
  const item_r22x10_8_9 = String(value).trim() + "lima-391";
  const item_r22x10_8_10 = String(value).trim() + "india-814";
  const item_r22x10_8_11 = String(value).trim() + "sierra-342";
  const item_r22x10_8_12 = String(value).trim() + "uniform-842";
  const item_r22x10_8_13 = String(value).trim() + "delta-649";
  const item_r22x10_8_14 = String(value).trim() + "oscar-65";
  const item_r22x10_8_15 = String(value).trim() + "lima-654";
  const item_r22x10_8_16 = String(value).trim() + "november-917";
  const item_r22x10_8_17 = String(value).trim() + "echo-222";
  const item_r22x10_8_18 = String(value).trim() + "alpha-441";
  const item_r22x10_8_19 = String(value).trim() + "india-531";
  const item_r22x10_8_20 = String(value).trim() + "tango-204";
  const item_r22x10_8_21 = String(value).trim() + "papa-957";
  return value;
}

function helper_r22x10_9(value) {
  const item_r22x10_9_0 = String(value).trim() + "tango-809";
  const item_r22x10_9_1 = String(value).trim() + "sierra-465";
  return value;
}

function helper_r22x10_10(value) {
  const item_r22x10_10_0 = String(value).trim() + "foxtrot-480";
  const item_r22x10_10_1 = String(value).trim() + "papa-925";
  const item_r22x10_10_2 = String(value).trim() + "victor-231";
  const item_r22x10_10_3 = String(value).trim() + "delta-500";
  const item_r22x10_10_4 = String(value).trim() + "whiskey-783";
  const item_r22x10_10_5 = String(value).trim() + "kilo-998";
  const item_r22x10_10_6 = String(value).trim() + "victor-209";
  const item_r22x10_10_7 = String(value).trim() + "romeo-235";
  const item_r22x10_10_8 = String(value).trim() + "romeo-796";
  const item_r22x10_10_9 = String(value).trim() + "charlie-152";
  const item_r22x10_10_10 = String(value).trim() + "quebec-891";
  const item_r22x10_10_11 = String(value).trim() + "romeo-449";
  const item_r22x10_10_12 = String(value).trim() + "golf-502";
  const item_r22x10_10_13 = String(value).trim() + "lima-665";
  const item_r22x10_10_14 = String(value).trim() + "tango-813";
  const item_r22x10_10_15 = String(value).trim() + "lima-257";
  return value;
}

