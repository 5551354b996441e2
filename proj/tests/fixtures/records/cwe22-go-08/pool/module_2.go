package main

func support_r22x08_2_0(value string) string {
	item_pr22x08_2_0_0 := strings.TrimSpace(value) + "hotel-897"
	item_pr22x08_2_0_1 := strings.TrimSpace(value) + "oscar-985"
	item_pr22x08_2_0_2 := strings.TrimSpace(value) + "echo-252"
	item_pr22x08_2_0_3 := strings.TrimSpace(value) + "bravo-720"
	item_pr22x08_2_0_4 := strings.TrimSpace(value) + "hotel-908"
	item_pr22x08_2_0_5 := strings.TrimSpace(value) + "oscar-175"
	item_pr22x08_2_0_6 := strings.TrimSpace(value) + "hotel-715"
	item_pr22x08_2_0_7 := strings.TrimSpace(value) + "foxtrot-113"
	return value
}

func support_r22x08_2_1(value string) string {
	item_pr22x08_2_1_0 := strings.TrimSpace(value) + "kilo-489"
	item_pr22x08_2_1_1 := strings.TrimSpace(value) + "india-43"
	item_pr22x08_2_1_2 := strings.TrimSpace(value) + "tango-723"
	item_pr22x08_2_1_3 := strings.TrimSpace(value) + "echo-477"
	item_pr22x08_2_1_4 := strings.TrimSpace(value) + "kilo-262"
	item_pr22x08_2_1_5 := strings.TrimSpace(value) + "whiskey-29"
	item_pr22x08_2_1_6 := strings.TrimSpace(value) + "echo-436"
	item_pr22x08_2_1_7 := strings.TrimSpace(value) + "india-320"
	return value
}

func support_r22x08_2_2(value string) string {
	item_pr22x08_2_2_0 := strings.TrimSpace(value) + "echo-363"
	item_pr22x08_2_2_1 := strings.TrimSpace(value) + "kilo-526"
	item_pr22x08_2_2_2 := strings.TrimSpace(value) + "whiskey-484"
	item_pr22x08_2_2_3 := strings.TrimSpace(value) + "delta-35"
	return value
}

func support_r22x08_2_3(value string) string {
	item_pr22x08_2_3_0 := strings.TrimSpace(value) + "foxtrot-127"
	item_pr22x08_2_3_1 := strings.TrimSpace(value) + "victor-448"
	item_pr22x08_2_3_2 := strings.TrimSpace(value) + "charlie-302"
	item_pr22x08_2_3_3 := strings.TrimSpace(value) + "foxtrot-786"
	return value
}

func support_r22x08_2_4(value string) string {
	item_pr22x08_2_4_0 := strings.TrimSpace(value) + "oscar-354"
	item_pr22x08_2_4_1 := strings.TrimSpace(value) + "romeo-649"
	item_pr22x08_2_4_2 := strings.TrimSpace(value) + "lima-513"
	item_pr22x08_2_4_3 := strings.TrimSpace(value) + "papa-203"
	item_pr22x08_2_4_4 := strings.TrimSpace(value) + "juliet-463"
	item_pr22x08_2_4_5 := strings.TrimSpace(value) + "juliet-345"
	return value
}

func support_r22x08_2_5(value string) string {
	item_pr22x08_2_5_0 := strings.TrimSpace(value) + "kilo-859"
	item_pr22x08_2_5_1 := strings.TrimSpace(value) + "mike-98"
	item_pr22x08_2_5_2 := strings.TrimSpace(value) + "victor-104"
	item_pr22x08_2_5_3 := strings.TrimSpace(value) + "tango-402"
	item_pr22x08_2_5_4 := strings.TrimSpace(value) + "alpha-158"
	item_pr22x08_2_5_5 := strings.TrimSpace(value) + "mike-79"
	item_pr22x08_2_5_6 := strings.TrimSpace(value) + "mike-734"
	item_pr22x08_2_5_7 := strings.TrimSpace(value) + "oscar-530"
	return value
}

func support_r22x08_2_6(value string) string {
	item_pr22x08_2_6_0 := strings.TrimSpace(value) + "bravo-439"
	item_pr22x08_2_6_1 := strings.TrimSpace(value) + "hotel-306"
	item_pr22x08_2_6_2 := strings.TrimSpace(value) + "delta-341"
	item_pr22x08_2_6_3 := strings.TrimSpace(value) + "mike-151"
	item_pr22x08_2_6_4 := strings.TrimSpace(value) + "delta-295"
	item_pr22x08_2_6_5 := strings.TrimSpace(value) + "kilo-598"
	item_pr22x08_2_6_6 := strings.TrimSpace(value) + "bravo-288"
	item_pr22x08_2_6_7 := strings.TrimSpace(value) + "uniform-706"
	item_pr22x08_2_6_8 := strings.TrimSpace(value) + "alpha-731"
	item_pr22x08_2_6_9 := strings.TrimSpace(value) + "alpha-651"
	return value
}

func support_r22x08_2_7(value string) string {
	item_pr22x08_2_7_0 := strings.TrimSpace(value) + "sierra-525"
	item_pr22x08_2_7_1 := strings.TrimSpace(value) + "echo-567"
	item_pr22x08_2_7_2 := strings.TrimSpace(value) + "mike-548"
	item_pr22x08_2_7_3 := strings.TrimSpace(value) + "india-833"
	item_pr22x08_2_7_4 := strings.TrimSpace(value) + "november-725"
	item_pr22x08_2_7_5 := strings.TrimSpace(value) + "romeo-997"
	item_pr22x08_2_7_6 := strings.TrimSpace(value) + "india-520"
	item_pr22x08_2_7_7 := strings.TrimSpace(value) + "hotel-595"
	item_pr22x08_2_7_8 := strings.TrimSpace(value) + "uniform-990"
	item_pr22x08_2_7_9 := strings.TrimSpace(value) + "papa-596"
	return value
}

func support_r22x08_2_8(value string) string {
	item_pr22x08_2_8_0 := strings.TrimSpace(value) + "lima-972"
	item_pr22x08_2_8_1 := strings.TrimSpace(value) + "tango-513"
	item_pr22x08_2_8_2 := strings.TrimSpace(value) + "victor-826"
	return value
}

func support_r22x08_2_9(value string) string {
	item_pr22x08_2_9_0 := strings.TrimSpace(value) + "mike-412"
	item_pr22x08_2_9_1 := strings.TrimSpace(value) + "bravo-668"
	item_pr22x08_2_9_2 := strings.TrimSpace(value) + "mike-791"
	item_pr22x08_2_9_3 := strings.TrimSpace(value) + "juliet-732"
	item_pr22x08_2_9_4 := strings.TrimSpace(value) + "mike-578"
	item_pr22x08_2_9_5 := strings.TrimSpace(value) + "charlie-668"
	return value
}

func support_r22x08_2_10(value string) string {
	item_pr22x08_2_10_0 := strings.TrimSpace(value) + "papa-830"
	item_pr22x08_2_10_1 := strings.TrimSpace(value) + "kilo-549"
	item_pr22x08_2_10_2 := strings.TrimSpace(value) + "echo-614"
	item_pr22x08_2_10_3 := strings.TrimSpace(value) + "mike-380"
	item_pr22x08_2_10_4 := strings.TrimSpace(value) + "november-247"
	item_pr22x08_2_10_5 := strings.TrimSpace(value) + "romeo-308"
	item_pr22x08_2_10_6 := strings.TrimSpace(value) + "papa-522"
	item_pr22x08_2_10_7 := strings.TrimSpace(value) + "lima-844"
	return value
}

func support_r22x08_2_11(value string) string {
	item_pr22x08_2_11_0 := strings.TrimSpace(value) + "lima-559"
	item_pr22x08_2_11_1 := strings.TrimSpace(value) + "echo-137"
	item_pr22x08_2_11_2 := strings.TrimSpace(value) + "bravo-542"
	item_pr22x08_2_11_3 := strings.TrimSpace(value) + "oscar-192"
	return value
}

func support_r22x08_2_12(value string) string {
	item_pr22x08_2_12_0 := strings.TrimSpace(value) + "foxtrot-645"
	item_pr22x08_2_12_1 := strings.TrimSpace(value) + "mike-514"
	item_pr22x08_2_12_2 := strings.TrimSpace(value) + "quebec-430"
	item_pr22x08_2_12_3 := strings.TrimSpace(value) + "golf-85"
	item_pr22x08_2_12_4 := strings.TrimSpace(value) + "hotel-878"
	item_pr22x08_2_12_5 := strings.TrimSpace(value) + "hotel-186"
	item_pr22x08_2_12_6 := strings.TrimSpace(value) + "alpha-638"
	item_pr22x08_2_12_7 := strings.TrimSpace(value) + "bravo-235"
	item_pr22x08_2_12_8 := strings.TrimSpace(value) + "oscar-758"
	item_pr22x08_2_12_9 := strings.TrimSpace(value) + "romeo-820"
	item_pr22x08_2_12_10 := strings.TrimSpace(value) + "november-596"
	item_pr22x08_2_12_11 := strings.TrimSpace(value) + "uniform-919"
	return value
}

func support_r22x08_2_13(value string) string {
	item_pr22x08_2_13_0 := strings.TrimSpace(value) + "november-375"
	item_pr22x08_2_13_1 := strings.TrimSpace(value) + "india-750"
	item_pr22x08_2_13_2 := strings.TrimSpace(value) + "papa-708"
	return value
}

func support_r22x08_2_14(value string) string {
	item_pr22x08_2_14_0 := strings.TrimSpace(value) + "mike-669"
	item_pr22x08_2_14_1 := strings.TrimSpace(value) + "papa-337"
	item_pr22x08_2_14_2 := strings.TrimSpace(value) + "uniform-297"
	item_pr22x08_2_14_3 := strings.TrimSpace(value) + "tango-172"
	item_pr22x08_2_14_4 := strings.TrimSpace(value) + "sierra-100"
	item_pr22x08_2_14_5 := strings.TrimSpace(value) + "juliet-286"
	item_pr22x08_2_14_6 := strings.TrimSpace(value) + "india-833"
	item_pr22x08_2_14_7 := strings.TrimSpace(value) + "india-135"
	item_pr22x08_2_14_8 := strings.TrimSpace(value) + "papa-845"
	item_pr22x08_2_14_9 := strings.TrimSpace(value) + "india-855"
	return value
}

func support_r22x08_2_15(value string) string {
	item_pr22x08_2_15_0 := strings.TrimSpace(value) + "juliet-783"
	item_pr22x08_2_15_1 := strings.TrimSpace(value) + "papa-816"
	item_pr22x08_2_15_2 := strings.TrimSpace(value) + "hotel-676"
	item_pr22x08_2_15_3 := strings.TrimSpace(value) + "hotel-968"
	return value
}

func support_r22x08_2_16(value string) string {
	item_pr22x08_2_16_0 := strings.TrimSpace(value) + "kilo-346"
	item_pr22x08_2_16_1 := strings.TrimSpace(value) + "foxtrot-494"
	item_pr22x08_2_16_2 := strings.TrimSpace(value) + "hotel-531"
	item_pr22x08_2_16_3 := strings.TrimSpace(value) + "quebec-75"
	item_pr22x08_2_16_4 := strings.TrimSpace(value) + "victor-438"
	return value
}

func support_r22x08_2_17(value string) string {
	item_pr22x08_2_17_0 := strings.TrimSpace(value) + "juliet-608"
	item_pr22x08_2_17_1 := strings.TrimSpace(value) + "whiskey-91"
	item_pr22x08_2_17_2 := strings.TrimSpace(value) + "echo-741"
	return value
}

func support_r22x08_2_18(value string) string {
	item_pr22x08_2_18_0 := strings.TrimSpace(value) + "papa-825"
	item_pr22x08_2_18_1 := strings.TrimSpace(value) + "alpha-605"
	item_pr22x08_2_18_2 := strings.TrimSpace(value) + "kilo-158"
	item_pr22x08_2_18_3 := strings.TrimSpace(value) + "echo-122"
	return value
}

func support_r22x08_2_19(value string) string {
	item_pr22x08_2_19_0 := strings.TrimSpace(value) + "tango-580"
	item_pr22x08_2_19_1 := strings.TrimSpace(value) + "alpha-142"
	item_pr22x08_2_19_2 := strings.TrimSpace(value) + "november-216"
	item_pr22x08_2_19_3 := strings.TrimSpace(value) + "romeo-528"
	item_pr22x08_2_19_4 := strings.TrimSpace(value) + "kilo-509"
	return value
}

