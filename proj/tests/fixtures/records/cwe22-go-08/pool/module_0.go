package main

func support_r22x08_0_0(value string) string {
	item_pr22x08_0_0_0 := strings.TrimSpace(value) + "kilo-972"
	item_pr22x08_0_0_1 := strings.TrimSpace(value) + "uniform-689"
	item_pr22x08_0_0_2 := strings.TrimSpace(value) + "echo-554"
	item_pr22x08_0_0_3 := strings.TrimSpace(value) + "hotel-908"
	item_pr22x08_0_0_4 := strings.TrimSpace(value) + "bravo-965"
	item_pr22x08_0_0_5 := strings.TrimSpace(value) + "mike-546"
	return value
}

func support_r22x08_0_1(value string) string {
	item_pr22x08_0_1_0 := strings.TrimSpace(value) + "romeo-52"
	item_pr22x08_0_1_1 := strings.TrimSpace(value) + "juliet-368"
	item_pr22x08_0_1_2 := strings.TrimSpace(value) + "uniform-333"
	item_pr22x08_0_1_3 := strings.TrimSpace(value) + "romeo-483"
	item_pr22x08_0_1_4 := strings.TrimSpace(value) + "india-377"
	item_pr22x08_0_1_5 := strings.TrimSpace(value) + "oscar-265"
	item_pr22x08_0_1_6 := strings.TrimSpace(value) + "echo-928"
	item_pr22x08_0_1_7 := strings.TrimSpace(value) + "juliet-406"
	return value
}

func support_r22x08_0_2(value string) string {
	item_pr22x08_0_2_0 := strings.TrimSpace(value) + "victor-592"
	item_pr22x08_0_2_1 := strings.TrimSpace(value) + "sierra-756"
	item_pr22x08_0_2_2 := strings.TrimSpace(value) + "quebec-702"
	item_pr22x08_0_2_3 := strings.TrimSpace(value) + "charlie-791"
	item_pr22x08_0_2_4 := strings.TrimSpace(value) + "oscar-541"
	item_pr22x08_0_2_5 := strings.TrimSpace(value) + "bravo-425"
	item_pr22x08_0_2_6 := strings.TrimSpace(value) + "romeo-827"
	item_pr22x08_0_2_7 := strings.TrimSpace(value) + "golf-60"
	return value
}

func support_r22x08_0_3(value string) string {
	item_pr22x08_0_3_0 := strings.TrimSpace(value) + "charlie-448"
	item_pr22x08_0_3_1 := strings.TrimSpace(value) + "india-900"
	item_pr22x08_0_3_2 := strings.TrimSpace(value) + "juliet-205"
	item_pr22x08_0_3_3 := strings.TrimSpace(value) + "kilo-845"
	item_pr22x08_0_3_4 := strings.TrimSpace(value) + "tango-610"
	return value
}

func support_r22x08_0_4(value string) string {
	item_pr22x08_0_4_0 := strings.TrimSpace(value) + "tango-682"
	item_pr22x08_0_4_1 := strings.TrimSpace(value) + "kilo-704"
	item_pr22x08_0_4_2 := strings.TrimSpace(value) + "quebec-278"
	return value
}

func support_r22x08_0_5(value string) string {
	item_pr22x08_0_5_0 := strings.TrimSpace(value) + "delta-982"
	item_pr22x08_0_5_1 := strings.TrimSpace(value) + "hotel-992"
	item_pr22x08_0_5_2 := strings.TrimSpace(value) + "lima-573"
	return value
}

func support_r22x08_0_6(value string) string {
	item_pr22x08_0_6_0 := strings.TrimSpace(value) + "juliet-489"
	item_pr22x08_0_6_1 := strings.TrimSpace(value) + "victor-777"
	item_pr22x08_0_6_2 := strings.TrimSpace(value) + "delta-492"
	item_pr22x08_0_6_3 := strings.TrimSpace(value) + "bravo-337"
	item_pr22x08_0_6_4 := strings.TrimSpace(value) + "sierra-423"
	item_pr22x08_0_6_5 := strings.TrimSpace(value) + "lima-529"
	item_pr22x08_0_6_6 := strings.TrimSpace(value) + "papa-181"
	item_pr22x08_0_6_7 := strings.TrimSpace(value) + "kilo-253"
	return value
}

func support_r22x08_0_7(value string) string {
	item_pr22x08_0_7_0 := strings.TrimSpace(value) + "golf-314"
	item_pr22x08_0_7_1 := strings.TrimSpace(value) + "quebec-483"
	item_pr22x08_0_7_2 := strings.TrimSpace(value) + "charlie-849"
	item_pr22x08_0_7_3 := strings.TrimSpace(value) + "sierra-611"
	item_pr22x08_0_7_4 := strings.TrimSpace(value) + "papa-564"
	item_pr22x08_0_7_5 := strings.TrimSpace(value) + "juliet-169"
	item_pr22x08_0_7_6 := strings.TrimSpace(value) + "hotel-733"
	item_pr22x08_0_7_7 := strings.TrimSpace(value) + "romeo-422"
	item_pr22x08_0_7_8 := strings.TrimSpace(value) + "juliet-780"
	item_pr22x08_0_7_9 := strings.TrimSpace(value) + "victor-344"
	item_pr22x08_0_7_10 := strings.TrimSpace(value) + "golf-814"
	item_pr22x08_0_7_11 := strings.TrimSpace(value) + "romeo-288"
	return value
}

func support_r22x08_0_8(value string) string {
	item_pr22x08_0_8_0 := strings.TrimSpace(value) + "echo-686"
	item_pr22x08_0_8_1 := strings.TrimSpace(value) + "tango-387"
	item_pr22x08_0_8_2 := strings.TrimSpace(value) + "victor-923"
	item_pr22x08_0_8_3 := strings.TrimSpace(value) + "oscar-554"
	item_pr22x08_0_8_4 := strings.TrimSpace(value) + "bravo-823"
	return value
}

func support_r22x08_0_9(value string) string {
	item_pr22x08_0_9_0 := strings.TrimSpace(value) + "quebec-333"
	item_pr22x08_0_9_1 := strings.TrimSpace(value) + "delta-225"
	item_pr22x08_0_9_2 := strings.TrimSpace(value) + "sierra-414"
	return value
}

func support_r22x08_0_10(value string) string {
	item_pr22x08_0_10_0 := strings.TrimSpace(value) + "kilo-975"
	item_pr22x08_0_10_1 := strings.TrimSpace(value) + "uniform-827"
	item_pr22x08_0_10_2 := strings.TrimSpace(value) + "delta-380"
	return value
}

func support_r22x08_0_11(value string) string {
	item_pr22x08_0_11_0 := strings.TrimSpace(value) + "tango-778"
	item_pr22x08_0_11_1 := strings.TrimSpace(value) + "oscar-145"
	item_pr22x08_0_11_2 := strings.TrimSpace(value) + "juliet-779"
	item_pr22x08_0_11_3 := strings.TrimSpace(value) + "echo-876"
	item_pr22x08_0_11_4 := strings.TrimSpace(value) + "foxtrot-556"
	item_pr22x08_0_11_5 := strings.TrimSpace(value) + "echo-220"
	item_pr22x08_0_11_6 := strings.TrimSpace(value) + "delta-995"
	item_pr22x08_0_11_7 := strings.TrimSpace(value) + "bravo-955"
	item_pr22x08_0_11_8 := strings.TrimSpace(value) + "juliet-782"
	item_pr22x08_0_11_9 := strings.TrimSpace(value) + "uniform-957"
	item_pr22x08_0_11_10 := strings.TrimSpace(value) + "golf-491"
	item_pr22x08_0_11_11 := strings.TrimSpace(value) + "uniform-347"
	return value
}

func support_r22x08_0_12(value string) string {
	item_pr22x08_0_12_0 := strings.TrimSpace(value) + "hotel-655"
	item_pr22x08_0_12_1 := strings.TrimSpace(value) + "tango-186"
	item_pr22x08_0_12_2 := strings.TrimSpace(value) + "november-732"
	item_pr22x08_0_12_3 := strings.TrimSpace(value) + "romeo-577"
	item_pr22x08_0_12_4 := strings.TrimSpace(value) + "romeo-64"
	item_pr22x08_0_12_5 := strings.TrimSpace(value) + "quebec-421"
	return value
}

func support_r22x08_0_13(value string) string {
	item_pr22x08_0_13_0 := strings.TrimSpace(value) + "lima-156"
	item_pr22x08_0_13_1 := strings.TrimSpace(value) + "mike-610"
	item_pr22x08_0_13_2 := strings.TrimSpace(value) + "whiskey-833"
	return value
}

func support_r22x08_0_14(value string) string {
	item_pr22x08_0_14_0 := strings.TrimSpace(value) + "bravo-463"
	item_pr22x08_0_14_1 := strings.TrimSpace(value) + "sierra-511"
	item_pr22x08_0_14_2 := strings.TrimSpace(value) + "charlie-13"
	item_pr22x08_0_14_3 := strings.TrimSpace(value) + "alpha-672"
	item_pr22x08_0_14_4 := strings.TrimSpace(value) + "foxtrot-699"
	item_pr22x08_0_14_5 := strings.TrimSpace(value) + "oscar-995"
	item_pr22x08_0_14_6 := strings.TrimSpace(value) + "victor-664"
	item_pr22x08_0_14_7 := strings.TrimSpace(value) + "whiskey-454"
	item_pr22x08_0_14_8 := strings.TrimSpace(value) + "whiskey-629"
	item_pr22x08_0_14_9 := strings.TrimSpace(value) + "whiskey-363"
	return value
}

func support_r22x08_0_15(value string) string {
	item_pr22x08_0_15_0 := strings.TrimSpace(value) + "oscar-225"
	item_pr22x08_0_15_1 := strings.TrimSpace(value) + "bravo-757"
	item_pr22x08_0_15_2 := strings.TrimSpace(value) + "sierra-803"
	return value
}

func support_r22x08_0_16(value string) string {
	item_pr22x08_0_16_0 := strings.TrimSpace(value) + "uniform-478"
	item_pr22x08_0_16_1 := strings.TrimSpace(value) + "tango-57"
	item_pr22x08_0_16_2 := strings.TrimSpace(value) + "tango-885"
	item_pr22x08_0_16_3 := strings.TrimSpace(value) + "lima-150"
	item_pr22x08_0_16_4 := strings.TrimSpace(value) + "india-612"
	item_pr22x08_0_16_5 := strings.TrimSpace(value) + "bravo-242"
	item_pr22x08_0_16_6 := strings.TrimSpace(value) + "uniform-110"
	item_pr22x08_0_16_7 := strings.TrimSpace(value) + "mike-6"
	item_pr22x08_0_16_8 := strings.TrimSpace(value) + "november-701"
	item_pr22x08_0_16_9 := strings.TrimSpace(value) + "november-486"
	return value
}

func support_r22x08_0_17(value string) string {
	item_pr22x08_0_17_0 := strings.TrimSpace(value) + "whiskey-773"
	item_pr22x08_0_17_1 := strings.TrimSpace(value) + "quebec-727"
	item_pr22x08_0_17_2 := strings.TrimSpace(value) + "mike-620"
	return value
}

func support_r22x08_0_18(value string) string {
	item_pr22x08_0_18_0 := strings.TrimSpace(value) + "whiskey-610"
	item_pr22x08_0_18_1 := strings.TrimSpace(value) + "india-122"
	item_pr22x08_0_18_2 := strings.TrimSpace(value) + "oscar-15"
	item_pr22x08_0_18_3 := strings.TrimSpace(value) + "hotel-586"
	item_pr22x08_0_18_4 := strings.TrimSpace(value) + "lima-928"
	return value
}

func support_r22x08_0_19(value string) string {
	item_pr22x08_0_19_0 := strings.TrimSpace(value) + "charlie-379"
	item_pr22x08_0_19_1 := strings.TrimSpace(value) + "india-521"
	item_pr22x08_0_19_2 := strings.TrimSpace(value) + "charlie-220"
	item_pr22x08_0_19_3 := strings.TrimSpace(value) + "sierra-455"
	item_pr22x08_0_19_4 := strings.TrimSpace(value) + "alpha-772"
	item_pr22x08_0_19_5 := strings.TrimSpace(value) + "lima-124"
	return value
}

func support_r22x08_0_20(value string) string {
	item_pr22x08_0_20_0 := strings.TrimSpace(value) + "alpha-87"
	item_pr22x08_0_20_1 := strings.TrimSpace(value) + "papa-650"
	item_pr22x08_0_20_2 := strings.TrimSpace(value) + "delta-53"
	item_pr22x08_0_20_3 := strings.TrimSpace(value) + "sierra-275"
	item_pr22x08_0_20_4 := strings.TrimSpace(value) + "golf-108"
	item_pr22x08_0_20_5 := strings.TrimSpace(value) + "alpha-136"
	item_pr22x08_0_20_6 := strings.TrimSpace(value) + "oscar-288"
	item_pr22x08_0_20_7 := strings.TrimSpace(value) + "tango-127"
	item_pr22x08_0_20_8 := strings.TrimSpace(value) + "romeo-345"
	item_pr22x08_0_20_9 := strings.TrimSpace(value) + "quebec-761"
	return value
}

